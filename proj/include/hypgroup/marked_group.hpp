#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hypgroup/bigvalue.hpp"
#include "hypgroup/group_spec.hpp"

namespace hypgroup {

// Canonical normal form of a group element. Which fields are populated
// depends on the model; equality of elements is bitwise equality of forms.
struct Element {
    std::vector<std::int32_t> word;  // Free: reduced word, letter +i / -i encodes a_i / a_i^-1
    std::vector<std::int64_t> vec;   // ZPow: coordinate vector; ZGens: single integer
    std::int64_t scalar = 0;         // CyclicFull: residue in [0, modulus)
    std::vector<Element> parts;      // Prod: {left, right}; FProd: alternating syllables
    std::vector<std::uint8_t> tags;  // FProd: factor tag (0/1) per syllable

    bool operator==(const Element&) const = default;
};

// Minimal word length of `value` in (Z, {steps}); steps must be symmetric
// and generate Z. BFS on a window that provably contains some geodesic.
std::int64_t zgens_word_length(const std::vector<std::int64_t>& steps, std::int64_t value);

// A group model together with its ordered symmetric generating set Sigma.
// Immutable after build; all operations are pure.
class MarkedGroup {
public:
    static MarkedGroup build(GroupSpecPtr spec);
    static MarkedGroup build(const std::string& text);

    const GroupSpecNode& spec() const { return *spec_; }
    GroupSpecPtr spec_ptr() const { return spec_; }
    std::string name() const { return spec_to_string(*spec_); }
    ModelKind kind() const { return spec_->kind; }

    int sigma_size() const { return static_cast<int>(sigma_.size()); }
    const std::vector<Element>& sigma() const { return sigma_; }
    const Element& generator(int i) const { return sigma_.at(i); }
    const std::string& generator_name(int i) const { return sigma_names_.at(i); }
    int inverse_generator(int i) const { return inv_map_.at(i); }

    Element identity() const;
    bool is_identity(const Element& a) const;
    Element multiply(const Element& a, const Element& b) const;
    Element inverse(const Element& a) const;
    Element power(const Element& a, std::int64_t k) const;

    // d_Sigma(e, a) from the model's closed form; no ball enumeration.
    std::int64_t exact_word_length(const Element& a) const;

    std::string render(const Element& a) const;
    // Canonical byte encoding; injective on elements of this group.
    void append_key(const Element& a, std::string& out) const;
    std::string element_key(const Element& a) const;

    bool finite() const;
    BigInt order() const;  // WrongModel for infinite models

    const MarkedGroup& left() const;   // Prod/FProd only (WrongModel otherwise)
    const MarkedGroup& right() const;

private:
    MarkedGroup() = default;

    GroupSpecPtr spec_;
    std::shared_ptr<const MarkedGroup> left_;
    std::shared_ptr<const MarkedGroup> right_;
    std::vector<Element> sigma_;
    std::vector<std::string> sigma_names_;
    std::vector<int> inv_map_;
    std::vector<std::int64_t> zgens_sym_;  // ZGens: symmetrized step values
};

} // namespace hypgroup
