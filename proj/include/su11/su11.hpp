#pragma once

#include "su11/classify.hpp"
#include "su11/disc_point.hpp"
#include "su11/errors.hpp"
#include "su11/format.hpp"
#include "su11/iwasawa.hpp"
#include "su11/matrix.hpp"
#include "su11/orbits.hpp"
#include "su11/sl2r.hpp"
#include "su11/stack.hpp"
#include "su11/tolerances.hpp"
