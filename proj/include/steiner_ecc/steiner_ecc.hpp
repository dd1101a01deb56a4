#pragma once

#include "steiner_ecc/canonical.hpp"
#include "steiner_ecc/census.hpp"
#include "steiner_ecc/error.hpp"
#include "steiner_ecc/extremal.hpp"
#include "steiner_ecc/rational.hpp"
#include "steiner_ecc/steiner.hpp"
#include "steiner_ecc/transforms.hpp"
#include "steiner_ecc/tree.hpp"
#include "steiner_ecc/tree_io.hpp"
