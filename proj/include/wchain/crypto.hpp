#pragma once

#include <array>
#include <compare>
#include <cstdint>

#include "wchain/bytes.hpp"

namespace wchain {

using NodeId = uint64_t;

/// 32-byte hash value. Equality is byte equality.
struct Digest {
    std::array<uint8_t, 32> bytes{};

    auto operator<=>(const Digest&) const = default;

    ByteView view() const { return ByteView(bytes.data(), bytes.size()); }
    std::string hex() const { return to_hex(view()); }

    static Digest from_hex(const std::string& s);
};

/// SHA-256 of the input.
Digest hash(ByteView data);

struct Signature {
    Bytes bytes;
    NodeId signer = 0;

    bool operator==(const Signature&) const = default;
};

struct KeyPair {
    Bytes secret;
    Bytes public_key;
    NodeId owner = 0;
};

/// Signature provider. The protocol never looks inside signatures, so any
/// scheme with deterministic keygen works; the default below is a keyed-hash
/// MAC whose verification key equals the signing key. Swap in a real scheme
/// by implementing this interface.
class SignatureScheme {
public:
    virtual ~SignatureScheme() = default;

    virtual KeyPair keygen(uint64_t seed, NodeId owner) const = 0;
    virtual Signature sign(const Bytes& secret, ByteView msg, NodeId signer) const = 0;
    virtual bool verify(const Bytes& public_key, ByteView msg, const Signature& sig) const = 0;
};

/// Deterministic test scheme: secret = H(0x5C || seed || owner), public key
/// equals the secret, sign(m) = H(secret || m). Malformed signature bytes
/// verify as false, never abort.
class KeyedHashScheme final : public SignatureScheme {
public:
    KeyPair keygen(uint64_t seed, NodeId owner) const override;
    Signature sign(const Bytes& secret, ByteView msg, NodeId signer) const override;
    bool verify(const Bytes& public_key, ByteView msg, const Signature& sig) const override;
};

const SignatureScheme& default_scheme();

} // namespace wchain
