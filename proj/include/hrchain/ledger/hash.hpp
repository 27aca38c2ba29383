#pragma once

#include "hrchain/common/bytes.hpp"
#include "hrchain/ledger/digest.hpp"

namespace hrchain::ledger {

/// Single SHA-256.
Digest sha256(ByteView data);

/// SHA-256 applied twice, H(H(data)). Every identifier, Merkle node and
/// signed message digest in the system goes through this function.
Digest double_hash(ByteView data);

/// double_hash(left || right), the Merkle interior-node combiner.
Digest hash_pair(const Digest& left, const Digest& right);

}  // namespace hrchain::ledger
