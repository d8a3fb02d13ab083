#pragma once

#include "rd/core.hpp"
#include "rd/driver.hpp"
#include "rd/edges.hpp"
#include "rd/fractional.hpp"
#include "rd/gadgets.hpp"
#include "rd/gen.hpp"
#include "rd/io.hpp"
#include "rd/maxflow.hpp"
#include "rd/nonsink.hpp"
#include "rd/oracle.hpp"
#include "rd/rational.hpp"
#include "rd/reduce.hpp"
#include "rd/stats.hpp"
