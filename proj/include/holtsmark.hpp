#pragma once

#include "holtsmark/auto.hpp"
#include "holtsmark/closed_form.hpp"
#include "holtsmark/dispatch.hpp"
#include "holtsmark/error.hpp"
#include "holtsmark/expansions.hpp"
#include "holtsmark/lee.hpp"
#include "holtsmark/method.hpp"
#include "holtsmark/oracle/checks.hpp"
#include "holtsmark/oracle/quadrature.hpp"
#include "holtsmark/series_control.hpp"
#include "holtsmark/specfun.hpp"
