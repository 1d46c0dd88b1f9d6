#pragma once

#include "neutral/alphabet.hpp"
#include "neutral/bifix.hpp"
#include "neutral/check.hpp"
#include "neutral/decoding.hpp"
#include "neutral/errors.hpp"
#include "neutral/extension.hpp"
#include "neutral/factor_set.hpp"
#include "neutral/iet.hpp"
#include "neutral/quadratic.hpp"
#include "neutral/rational.hpp"
#include "neutral/returns.hpp"
