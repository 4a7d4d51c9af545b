#pragma once

#include "brute_force.hpp"
#include "deck.hpp"
#include "dot.hpp"
#include "downset_count.hpp"
#include "enumeration.hpp"
#include "errors.hpp"
#include "json_io.hpp"
#include "number_theory.hpp"
#include "params.hpp"
#include "periods.hpp"
#include "poset.hpp"
#include "shuffle.hpp"
#include "text_io.hpp"
#include "weight.hpp"
