#pragma once

#include "errors.hpp"
#include "modarith.hpp"
#include "random.hpp"
#include "sieve.hpp"
#include "primality.hpp"
#include "rsa.hpp"
#include "keyfile.hpp"
#include "bench.hpp"
