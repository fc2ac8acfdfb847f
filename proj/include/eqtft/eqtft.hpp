#pragma once

// Umbrella header.

#include "bundle.hpp"
#include "corpus.hpp"
#include "cocycle.hpp"
#include "config.hpp"
#include "crossed.hpp"
#include "cyclotomic.hpp"
#include "error.hpp"
#include "frobenius.hpp"
#include "group.hpp"
#include "groupoid.hpp"
#include "integration.hpp"
#include "invariants.hpp"
#include "mapping.hpp"
#include "matrix.hpp"
#include "orbifold.hpp"
#include "pullback.hpp"
#include "pushforward.hpp"
#include "rational.hpp"
#include "repgrpd.hpp"
#include "suite.hpp"
#include "twisted.hpp"
