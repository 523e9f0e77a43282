#pragma once

// Umbrella header: length invariants, algebraic entropy, the Kunz regularity
// test, Hilbert-Kunz ratios, and the Nagata flatness sampler for self-maps of
// local rings presented as polynomial quotients localized at the origin.

#include "entrolab/dynamics.hpp"
#include "entrolab/endomorphism.hpp"
#include "entrolab/errors.hpp"
#include "entrolab/fields.hpp"
#include "entrolab/groebner.hpp"
#include "entrolab/jobfile.hpp"
#include "entrolab/local_ring.hpp"
#include "entrolab/monomial.hpp"
#include "entrolab/parser.hpp"
#include "entrolab/polynomial.hpp"
#include "entrolab/report.hpp"
