#pragma once

#include "romanoff/arith.hpp"
#include "romanoff/cache.hpp"
#include "romanoff/elliptic.hpp"
#include "romanoff/errors.hpp"
#include "romanoff/extremal.hpp"
#include "romanoff/lemmas.hpp"
#include "romanoff/moments.hpp"
#include "romanoff/parallel.hpp"
#include "romanoff/polynomial.hpp"
#include "romanoff/romanoff.hpp"
#include "romanoff/sequences.hpp"
#include "romanoff/serialize.hpp"
#include "romanoff/sieve.hpp"
