#pragma once

#include "shellkit/complex.hpp"
#include "shellkit/monomial.hpp"
#include "shellkit/realization.hpp"
#include "shellkit/render.hpp"
#include "shellkit/report.hpp"
#include "shellkit/shelling.hpp"
#include "shellkit/verify.hpp"
