#include "fwforge/ncalg/word.hpp"

#include <stdexcept>

namespace fwforge::ncalg {

Word Word::parse(std::string_view letters)
{
    Word w;
    for (char c : letters) {
        if (c == ' ')
            continue;
        if (c != 'E' && c != 'O')
            throw std::invalid_argument(std::string("not an algebra letter: ") + c);
        w = w * Word(c == 'O' ? Letter::O : Letter::E);
    }
    return w;
}

Letter Word::at(int i) const
{
    if (i < 0 || i >= size_)
        throw std::out_of_range("word index");
    return ((bits_ >> (size_ - 1 - i)) & 1u) ? Letter::O : Letter::E;
}

Word Word::operator*(const Word& rhs) const
{
    int n = size_ + rhs.size_;
    if (n > kMaxLength)
        throw std::length_error("word longer than " + std::to_string(kMaxLength) + " letters");
    return Word(static_cast<std::uint8_t>(n), (bits_ << rhs.size_) | rhs.bits_);
}

Word Word::reversed() const
{
    std::uint64_t r = 0;
    for (int i = 0; i < size_; ++i)
        r |= ((bits_ >> i) & 1u) << (size_ - 1 - i);
    return Word(size_, r);
}

std::string Word::str(std::string_view sep) const
{
    std::string out;
    for (int i = 0; i < size_; ++i) {
        if (i)
            out += sep;
        out += at(i) == Letter::O ? 'O' : 'E';
    }
    return out;
}

} // namespace fwforge::ncalg
