#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "wchain/crypto.hpp"

namespace wchain {

using Tick = uint64_t;

/// Global locator of a state: sequence number within a chain plus the chain
/// id. seq 0 is the chain's genesis marker; real states start at seq 1.
struct Coordinate {
    NodeId chain = 0;
    uint64_t seq = 0;

    auto operator<=>(const Coordinate&) const = default;
};

/// Happens-before edge between two coordinates: `to` happens before `from`.
/// On a single chain this means to.seq < from.seq.
struct Reference {
    Coordinate from;
    Coordinate to;

    auto operator<=>(const Reference&) const = default;

    Reference reversed() const { return Reference{to, from}; }
};

enum class StateStatus : uint64_t {
    Provisional = 0,
    Prepared = 1,
    Committed = 2,
    Superseded = 3,
    Aborted = 4,
};

const char* to_string(StateStatus s);

struct ClientMessage {
    Digest id;          // hash of the canonical encoding of the fields below
    uint64_t client = 0;
    uint64_t lamport_ts = 0;
    Bytes payload;

    bool operator==(const ClientMessage&) const = default;
};

/// One block on one node's chain. The digest covers everything up to and
/// including `supersedes`; signature, digest and status live outside the
/// digested content (status is local lifecycle, the digest cannot contain
/// itself, and the signature is over the digested content).
struct State {
    Coordinate coord;
    Digest merkle_root;
    Digest message_hash;
    Digest parent_digest;
    std::map<NodeId, Digest> remote_snapshot; // latest known digest per peer
    std::vector<Reference> refs;              // parent edge + one edge per snapshot entry
    std::optional<Coordinate> supersedes;     // set on complementary re-attachments
    Digest digest;
    Signature signature;
    StateStatus status = StateStatus::Provisional;

    bool operator==(const State&) const = default;
};

} // namespace wchain
