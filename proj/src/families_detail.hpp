#pragma once

#include <string>

#include "tensorwalk/family.hpp"

namespace tensorwalk::detail {

ChainSpec make_bdn(int n, const std::string& choice);
ChainSpec make_sl2p(int p, const std::string& choice);
ChainSpec make_sl2p2(int p, const std::string& choice);
ChainSpec make_sl22n(int n, const std::string& choice);
ChainSpec make_sl3p(int p, const std::string& choice);
ChainSpec make_quantum(int n, const std::string& choice);

CharacterData chars_bdn(int n);
CharacterData chars_sl2p(int p);
CharacterData chars_sl2p2(int p);
CharacterData chars_sl22n(int n);
CharacterData chars_sl3p(int p);

bool is_prime(long v);

// Shared helper: merge (state, multiplicity) pairs, dropping zero entries.
Decomp merge_decomp(std::vector<std::pair<int, long>> raw);

}  // namespace tensorwalk::detail
