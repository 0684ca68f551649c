#pragma once

#include "fano95/basket.hpp"
#include "fano95/blowup.hpp"
#include "fano95/chain.hpp"
#include "fano95/database.hpp"
#include "fano95/errors.hpp"
#include "fano95/families.hpp"
#include "fano95/intersection.hpp"
#include "fano95/monomials.hpp"
#include "fano95/quasismooth.hpp"
#include "fano95/quotient.hpp"
#include "fano95/rational.hpp"
#include "fano95/search.hpp"
#include "fano95/weights.hpp"
