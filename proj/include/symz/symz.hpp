#pragma once

#include "symz/corpus.hpp"
#include "symz/errors.hpp"
#include "symz/factor.hpp"
#include "symz/jordan.hpp"
#include "symz/linalg.hpp"
#include "symz/nilpotent.hpp"
#include "symz/poly_text.hpp"
#include "symz/report.hpp"
#include "symz/st_decompose.hpp"
#include "symz/symmetrizer.hpp"
#include "symz/verify.hpp"
