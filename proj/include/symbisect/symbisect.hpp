#pragma once

#include "symbisect/bisection.hpp"
#include "symbisect/body.hpp"
#include "symbisect/body_io.hpp"
#include "symbisect/certify.hpp"
#include "symbisect/error.hpp"
#include "symbisect/generators.hpp"
#include "symbisect/geometry.hpp"
#include "symbisect/optimize.hpp"
#include "symbisect/predicates.hpp"
#include "symbisect/report.hpp"
