#include "wchain/crypto.hpp"

#include <openssl/evp.h>

#include "wchain/errors.hpp"

namespace wchain {

Digest Digest::from_hex(const std::string& s) {
    Bytes raw = wchain::from_hex(s);
    if (raw.size() != 32)
        throw Error("digest hex must decode to 32 bytes");
    Digest d;
    std::copy(raw.begin(), raw.end(), d.bytes.begin());
    return d;
}

Digest hash(ByteView data) {
    Digest out;
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), out.bytes.data(), &len, EVP_sha256(), nullptr) != 1 ||
        len != out.bytes.size())
        throw Error("SHA-256 failed");
    return out;
}

KeyPair KeyedHashScheme::keygen(uint64_t seed, NodeId owner) const {
    ByteWriter w;
    w.u8(0x5C);
    w.u64(seed);
    w.u64(owner);
    Digest secret = hash(w.data());
    Bytes key(secret.bytes.begin(), secret.bytes.end());
    return KeyPair{key, key, owner};
}

Signature KeyedHashScheme::sign(const Bytes& secret, ByteView msg, NodeId signer) const {
    Bytes material = secret;
    material.insert(material.end(), msg.begin(), msg.end());
    Digest mac = hash(material);
    return Signature{Bytes(mac.bytes.begin(), mac.bytes.end()), signer};
}

bool KeyedHashScheme::verify(const Bytes& public_key, ByteView msg, const Signature& sig) const {
    if (sig.bytes.size() != 32 || public_key.empty())
        return false;
    Signature expect = sign(public_key, msg, sig.signer);
    return expect.bytes == sig.bytes;
}

const SignatureScheme& default_scheme() {
    static const KeyedHashScheme scheme;
    return scheme;
}

} // namespace wchain
