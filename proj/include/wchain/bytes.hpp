#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <vector>

namespace wchain {

using Bytes = std::vector<uint8_t>;
using ByteView = std::span<const uint8_t>;

/// Append-only writer for the canonical wire layout: unsigned integers are
/// 8-byte big-endian, byte strings carry an 8-byte big-endian length prefix,
/// lists an 8-byte big-endian element count.
class ByteWriter {
public:
    void u8(uint8_t v) { out_.push_back(v); }

    void u64(uint64_t v) {
        for (int shift = 56; shift >= 0; shift -= 8)
            out_.push_back(static_cast<uint8_t>(v >> shift));
    }

    void raw(ByteView data) { out_.insert(out_.end(), data.begin(), data.end()); }

    void bytes(ByteView data) {
        u64(data.size());
        raw(data);
    }

    const Bytes& data() const { return out_; }
    Bytes take() { return std::move(out_); }
    size_t size() const { return out_.size(); }

private:
    Bytes out_;
};

/// Bounds-checked reader over the same layout. Throws std::out_of_range on
/// short input; callers translate that into their own error type.
class ByteReader {
public:
    explicit ByteReader(ByteView data) : data_(data) {}

    uint8_t u8() {
        need(1);
        return data_[pos_++];
    }

    uint64_t u64() {
        need(8);
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i)
            v = (v << 8) | data_[pos_ + i];
        pos_ += 8;
        return v;
    }

    Bytes bytes() {
        uint64_t len = u64();
        need(len);
        Bytes out(data_.begin() + pos_, data_.begin() + pos_ + len);
        pos_ += len;
        return out;
    }

    void raw(std::span<uint8_t> dst) {
        need(dst.size());
        std::memcpy(dst.data(), data_.data() + pos_, dst.size());
        pos_ += dst.size();
    }

    bool exhausted() const { return pos_ == data_.size(); }
    size_t remaining() const { return data_.size() - pos_; }

private:
    void need(size_t n) const {
        if (data_.size() - pos_ < n)
            throw std::out_of_range("byte reader: input truncated");
    }

    ByteView data_;
    size_t pos_ = 0;
};

inline std::string to_hex(ByteView data) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(data.size() * 2);
    for (uint8_t b : data) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 0xF]);
    }
    return s;
}

inline Bytes from_hex(const std::string& s) {
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    Bytes out;
    if (s.size() % 2 != 0)
        throw std::out_of_range("hex string has odd length");
    out.reserve(s.size() / 2);
    for (size_t i = 0; i < s.size(); i += 2) {
        int hi = nibble(s[i]), lo = nibble(s[i + 1]);
        if (hi < 0 || lo < 0)
            throw std::out_of_range("invalid hex digit");
        out.push_back(static_cast<uint8_t>(hi << 4 | lo));
    }
    return out;
}

} // namespace wchain
