#pragma once

/// Umbrella header for the whole library.

#include "adtpf/aadt.hpp"
#include "adtpf/adt.hpp"
#include "adtpf/bdd.hpp"
#include "adtpf/bench.hpp"
#include "adtpf/bit_vector.hpp"
#include "adtpf/bottom_up.hpp"
#include "adtpf/deadline.hpp"
#include "adtpf/errors.hpp"
#include "adtpf/generator.hpp"
#include "adtpf/io.hpp"
#include "adtpf/naive.hpp"
#include "adtpf/semiring.hpp"
