#pragma once

#include "cylhook/diagram.hpp"
#include "cylhook/errors.hpp"
#include "cylhook/excited.hpp"
#include "cylhook/formulas.hpp"
#include "cylhook/paths.hpp"
#include "cylhook/rational.hpp"
#include "cylhook/report.hpp"
#include "cylhook/tableaux.hpp"
