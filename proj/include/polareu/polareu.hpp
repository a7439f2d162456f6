#pragma once

#include "commands.hpp"
#include "crosscheck.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "groebner.hpp"
#include "ideal_ops.hpp"
#include "invariants.hpp"
#include "parse.hpp"
#include "polar.hpp"
#include "polynomial.hpp"
#include "report.hpp"
#include "variety_file.hpp"
