#pragma once

#include <cstdint>
#include <vector>

#include "wchain/crypto.hpp"
#include "wchain/types.hpp"

namespace wchain::merkle {

/// Which side of the running hash a proof sibling sits on.
enum class Side : uint64_t { Left = 0, Right = 1 };

struct ProofStep {
    Digest sibling;
    Side side = Side::Left;

    bool operator==(const ProofStep&) const = default;
};

struct InclusionProof {
    uint64_t leaf_index = 0;
    std::vector<ProofStep> siblings;

    bool operator==(const InclusionProof&) const = default;
};

/// Links a state to its predecessor on the same chain.
struct ChainExtensionProof {
    Digest prev_digest;
    Coordinate prev_coord;

    bool operator==(const ChainExtensionProof&) const = default;
};

/// The three proofs attached to every Pre-prepare: p_m for the client message
/// leaf, p_b for the chain extension, p_s one per remote-state leaf in
/// ascending peer order.
struct ProofBundle {
    InclusionProof p_m;
    ChainExtensionProof p_b;
    std::vector<InclusionProof> p_s;

    bool operator==(const ProofBundle&) const = default;
};

/// Binary hash tree with domain separation: leaves are absorbed as
/// hash(0x00 || leaf), internal nodes as hash(0x01 || left || right), and an
/// odd node at any level is paired with itself.
struct MerkleTree {
    std::vector<Digest> leaves;
    std::vector<std::vector<Digest>> levels; // levels[0] = hashed leaves
    Digest root;
};

/// Leaves are [message_hash] followed by the remote-state digests, which the
/// caller supplies ordered by peer id ascending.
MerkleTree build_tree(const Digest& message_hash, const std::vector<Digest>& remote_states);

/// Throws IndexOutOfRangeError if leaf_index >= leaf count.
InclusionProof prove(const MerkleTree& tree, uint64_t leaf_index);

/// True iff the recomputed path hash equals root. Malformed proofs return
/// false, never throw.
bool verify_proof(const Digest& root, const Digest& leaf, const InclusionProof& proof);

} // namespace wchain::merkle
