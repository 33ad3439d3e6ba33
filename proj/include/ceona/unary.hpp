#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ceona/errors.hpp"
#include "ceona/gate_function.hpp"

// Correlated unary/stochastic bit-stream encodings and bit-wise gate algebra.
// Streams are materialized (word-packed, index 0 = first transmitted symbol)
// so gate outputs remain inspectable.

namespace ceona::unary {

enum class Encoding { Thermometer, EvenSpread, Raw };
enum class Endianness { LeftAligned, RightAligned };

// Operand bit width B and the derived stream lengths: 2^B for SUB/MUL,
// 2^(B+1) for ADD.
struct OperandPrecision {
  int bits;

  explicit OperandPrecision(int b) : bits(b) {
    if (b < 1 || b > 16) throw input_error("operand precision must be in [1, 16]");
  }

  std::size_t mul_length() const { return std::size_t{1} << bits; }
  std::size_t sub_length() const { return std::size_t{1} << bits; }
  std::size_t add_length() const { return std::size_t{1} << (bits + 1); }
  std::uint64_t operand_limit() const { return std::uint64_t{1} << bits; }
};

namespace detail {

constexpr std::size_t kMaxStreamLength = std::size_t{1} << 17;  // 2^(16+1)

inline void check_length(std::size_t length) {
  if (length == 0 || !std::has_single_bit(length))
    throw input_error("stream length must be a power of two");
  if (length > kMaxStreamLength)
    throw input_error("stream length exceeds the 2^17 cap");
}

}  // namespace detail

// A finite bit sequence with declared encoding and represented value.
// popcount(bits) == value() holds for every construction path.
class UnaryStream {
 public:
  UnaryStream() = default;

  std::size_t length() const { return length_; }
  Encoding encoding() const { return encoding_; }
  Endianness endianness() const { return endianness_; }
  std::uint64_t value() const { return value_; }

  bool bit(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  std::uint64_t popcount() const {
    std::uint64_t n = 0;
    for (std::uint64_t w : words_) n += std::popcount(w);
    return n;
  }

  std::span<const std::uint64_t> words() const { return words_; }

  // Transient-order rendering: index 0 leftmost.
  std::string to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i)
      if (bit(i)) s[i] = '1';
    return s;
  }

  static UnaryStream thermometer(std::uint64_t value, std::size_t length, Endianness end);
  static UnaryStream even_spread(std::uint64_t value, std::size_t length);
  static UnaryStream raw(std::vector<std::uint64_t> words, std::size_t length);

 private:
  UnaryStream(std::size_t length, Encoding enc, Endianness end)
      : words_((length + 63) / 64, 0), length_(length), encoding_(enc), endianness_(end) {}

  void set_bit(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

  std::vector<std::uint64_t> words_;
  std::size_t length_ = 0;
  Encoding encoding_ = Encoding::Raw;
  Endianness endianness_ = Endianness::RightAligned;
  std::uint64_t value_ = 0;
};

// Contiguous run of `value` ones anchored at the declared end.
inline UnaryStream UnaryStream::thermometer(std::uint64_t value, std::size_t length,
                                            Endianness end) {
  detail::check_length(length);
  if (value > length) throw input_error("thermometer value exceeds stream length");
  UnaryStream s(length, Encoding::Thermometer, end);
  const std::size_t begin = (end == Endianness::LeftAligned) ? 0 : length - value;
  for (std::size_t i = begin; i < begin + value; ++i) s.set_bit(i);
  s.value_ = value;
  return s;
}

// Bresenham spread: bit i is 1 iff floor((i+1)v/L) > floor(iv/L). Any window
// of length x then holds between floor(xv/L) and ceil(xv/L)+1 ones.
inline UnaryStream UnaryStream::even_spread(std::uint64_t value, std::size_t length) {
  detail::check_length(length);
  if (value > length) throw input_error("even-spread value exceeds stream length");
  UnaryStream s(length, Encoding::EvenSpread, Endianness::RightAligned);
  for (std::size_t i = 0; i < length; ++i) {
    if ((i + 1) * value / length > i * value / length) s.set_bit(i);
  }
  s.value_ = value;
  return s;
}

inline UnaryStream UnaryStream::raw(std::vector<std::uint64_t> words, std::size_t length) {
  detail::check_length(length);
  UnaryStream s(length, Encoding::Raw, Endianness::RightAligned);
  s.words_ = std::move(words);
  s.words_.resize((length + 63) / 64, 0);
  if (length & 63) s.words_.back() &= (std::uint64_t{1} << (length & 63)) - 1;
  s.value_ = s.popcount();
  return s;
}

inline UnaryStream encode_thermometer(std::uint64_t value, std::size_t length,
                                      Endianness end) {
  return UnaryStream::thermometer(value, length, end);
}

inline UnaryStream encode_even_spread(std::uint64_t value, std::size_t length) {
  return UnaryStream::even_spread(value, length);
}

namespace detail {

inline void check_operand(std::uint64_t v, const OperandPrecision& p) {
  if (v >= p.operand_limit()) throw input_error("operand out of range for precision");
}

}  // namespace detail

// ADD operands: opposite endianness on a double-length stream, so the two
// runs never overlap and OR counts x + w exactly.
inline std::pair<UnaryStream, UnaryStream> prepare_add(std::uint64_t x, std::uint64_t w,
                                                       const OperandPrecision& p) {
  detail::check_operand(x, p);
  detail::check_operand(w, p);
  const std::size_t length = p.add_length();
  return {UnaryStream::thermometer(x, length, Endianness::LeftAligned),
          UnaryStream::thermometer(w, length, Endianness::RightAligned)};
}

// SUB operands: identical endianness, so XOR keeps exactly the |x - w|
// symmetric difference.
inline std::pair<UnaryStream, UnaryStream> prepare_sub(std::uint64_t x, std::uint64_t w,
                                                       const OperandPrecision& p) {
  detail::check_operand(x, p);
  detail::check_operand(w, p);
  const std::size_t length = p.sub_length();
  return {UnaryStream::thermometer(x, length, Endianness::RightAligned),
          UnaryStream::thermometer(w, length, Endianness::RightAligned)};
}

// MUL operands: thermometer x against an even-spread w, which keeps the
// conditional ones-density of w inside the x-run equal to its marginal
// density. AND then counts x*w/2^B to within one count.
inline std::pair<UnaryStream, UnaryStream> prepare_mul(std::uint64_t x, std::uint64_t w,
                                                       const OperandPrecision& p) {
  detail::check_operand(x, p);
  detail::check_operand(w, p);
  const std::size_t length = p.mul_length();
  return {UnaryStream::thermometer(x, length, Endianness::RightAligned),
          UnaryStream::even_spread(w, length)};
}

// Element-wise logic over equal-length streams; the result is a Raw stream
// whose value is the output popcount.
inline UnaryStream stream_gate(const UnaryStream& a, const UnaryStream& b, GateFunction g) {
  if (a.length() != b.length()) throw input_error("stream length mismatch");
  const std::size_t length = a.length();
  std::vector<std::uint64_t> out(a.words().size());
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t i = 0; i < out.size(); ++i) {
    switch (g) {
      case GateFunction::And:  out[i] = wa[i] & wb[i]; break;
      case GateFunction::Or:   out[i] = wa[i] | wb[i]; break;
      case GateFunction::Xor:  out[i] = wa[i] ^ wb[i]; break;
      case GateFunction::Nand: out[i] = ~(wa[i] & wb[i]); break;
      case GateFunction::Nor:  out[i] = ~(wa[i] | wb[i]); break;
      case GateFunction::Xnor: out[i] = ~(wa[i] ^ wb[i]); break;
    }
  }
  return UnaryStream::raw(std::move(out), length);
}

}  // namespace ceona::unary
