#pragma once

#include "uag/abelian.hpp"
#include "uag/bicyclic.hpp"
#include "uag/common.hpp"
#include "uag/congruence.hpp"
#include "uag/finite_algebra.hpp"
#include "uag/formulas.hpp"
#include "uag/geometry.hpp"
#include "uag/hom.hpp"
#include "uag/intmat.hpp"
#include "uag/language.hpp"
#include "uag/natsolve.hpp"
#include "uag/normalize.hpp"
#include "uag/parser.hpp"
#include "uag/report.hpp"
#include "uag/term.hpp"
#include "uag/unar.hpp"
