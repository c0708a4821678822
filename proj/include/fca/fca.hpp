#ifndef FCA_FCA_HPP
#define FCA_FCA_HPP

#include "fca/bitset.hpp"
#include "fca/error.hpp"
#include "fca/context.hpp"
#include "fca/concepts.hpp"
#include "fca/lattice.hpp"
#include "fca/export.hpp"
#include "fca/similarity.hpp"
#include "fca/corpus.hpp"

#endif  // FCA_FCA_HPP
