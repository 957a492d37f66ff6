#pragma once

#include "lrpic/diagram.hpp"
#include "lrpic/tableau.hpp"
#include "lrpic/reading.hpp"
#include "lrpic/picture.hpp"
#include "lrpic/lr.hpp"
#include "lrpic/crystal.hpp"
#include "lrpic/verify.hpp"
