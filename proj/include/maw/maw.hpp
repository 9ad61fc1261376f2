#pragma once

#include "maw/alphabet.hpp"
#include "maw/bench.hpp"
#include "maw/bit_rows.hpp"
#include "maw/cli.hpp"
#include "maw/fasta.hpp"
#include "maw/letter_set.hpp"
#include "maw/maw_core.hpp"
#include "maw/oracle.hpp"
#include "maw/suffix_index.hpp"
