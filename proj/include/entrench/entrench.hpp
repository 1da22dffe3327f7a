#pragma once

#include "entrench/class_set.hpp"
#include "entrench/consequence.hpp"
#include "entrench/demo.hpp"
#include "entrench/duality.hpp"
#include "entrench/entrenchment.hpp"
#include "entrench/formula.hpp"
#include "entrench/maxiconsistent.hpp"
#include "entrench/naming.hpp"
#include "entrench/prop.hpp"
#include "entrench/random.hpp"
#include "entrench/report.hpp"
#include "entrench/theory_file.hpp"
#include "entrench/verify.hpp"
