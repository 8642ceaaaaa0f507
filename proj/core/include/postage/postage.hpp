#pragma once

#include "postage/analysis.hpp"
#include "postage/basis.hpp"
#include "postage/cover.hpp"
#include "postage/error.hpp"
#include "postage/families.hpp"
#include "postage/report_json.hpp"
#include "postage/search.hpp"
