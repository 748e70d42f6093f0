#pragma once

// Umbrella header.

#include "chiy/audit.hpp"
#include "chiy/catalog.hpp"
#include "chiy/chern_polynomial.hpp"
#include "chiy/descriptor.hpp"
#include "chiy/genus.hpp"
#include "chiy/manifold.hpp"
#include "chiy/matrix.hpp"
#include "chiy/partition.hpp"
#include "chiy/polynomial.hpp"
#include "chiy/rational.hpp"
#include "chiy/serialize.hpp"
#include "chiy/symmetric.hpp"
#include "chiy/truncated_series.hpp"
