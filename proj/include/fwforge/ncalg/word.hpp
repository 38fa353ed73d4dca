#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace fwforge::ncalg {

enum class Letter : std::uint8_t { E = 0, O = 1 };

// Product of algebra letters. Letters are packed into a bit string with the
// first letter in the most significant used bit, so words of equal length
// order lexicographically with E < O.
class Word {
public:
    static constexpr int kMaxLength = 63;

    Word() = default;
    explicit Word(Letter l) : size_(1), bits_(l == Letter::O ? 1u : 0u) {}

    // Accepts "EOO", "E O O" or the empty string.
    static Word parse(std::string_view letters);

    int size() const { return size_; }
    bool empty() const { return size_ == 0; }
    int oCount() const { return std::popcount(bits_); }
    int eCount() const { return size_ - oCount(); }
    int parity() const { return oCount() & 1; }
    Letter at(int i) const;

    Word operator*(const Word& rhs) const;
    Word reversed() const;

    std::string str(std::string_view sep = " ") const;

    friend auto operator<=>(const Word&, const Word&) = default;
    friend bool operator==(const Word&, const Word&) = default;

private:
    Word(std::uint8_t size, std::uint64_t bits) : size_(size), bits_(bits) {}

    std::uint8_t size_ = 0;
    std::uint64_t bits_ = 0;
};

} // namespace fwforge::ncalg
