#pragma once

#include "ajulia/complex_dynamics.hpp"
#include "ajulia/config.hpp"
#include "ajulia/connectivity.hpp"
#include "ajulia/error.hpp"
#include "ajulia/padic_dynamics.hpp"
#include "ajulia/polynomial.hpp"
#include "ajulia/rational.hpp"
#include "ajulia/render.hpp"
