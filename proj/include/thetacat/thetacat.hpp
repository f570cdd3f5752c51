#pragma once

#include "thetacat/analysis.hpp"
#include "thetacat/category.hpp"
#include "thetacat/checks.hpp"
#include "thetacat/constructions.hpp"
#include "thetacat/dump.hpp"
#include "thetacat/errors.hpp"
#include "thetacat/keyed.hpp"
#include "thetacat/memo.hpp"
#include "thetacat/precat.hpp"
#include "thetacat/suite.hpp"
#include "thetacat/theta.hpp"
#include "thetacat/window.hpp"
