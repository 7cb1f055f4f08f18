#pragma once

#include "confal/rational.hpp"
#include "confal/upoly.hpp"
#include "confal/matpoly.hpp"
#include "confal/sparse.hpp"
#include "confal/ore.hpp"
#include "confal/delem.hpp"
#include "confal/model.hpp"
#include "confal/diff_conformal.hpp"
#include "confal/presented.hpp"
#include "confal/checks.hpp"
#include "confal/growth.hpp"
#include "confal/structure.hpp"
#include "confal/dsl.hpp"
