#include "hypgroup/marked_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace hypgroup {

namespace {

constexpr std::int64_t kMaxRank = 64;
constexpr std::int64_t kMaxModulus = 65536;
constexpr std::int64_t kMaxZGens = 64;
constexpr std::int64_t kMaxZGenAbs = 1000000;
constexpr int kMaxDepth = 16;

void append_le64(std::int64_t v, std::string& out) {
    auto u = static_cast<std::uint64_t>(v);
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((u >> (8 * i)) & 0xff));
}

void append_le32(std::uint32_t v, std::string& out) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

} // namespace

std::int64_t zgens_word_length(const std::vector<std::int64_t>& steps, std::int64_t value) {
    if (value == 0) return 0;
    std::int64_t max_step = 0;
    for (std::int64_t s : steps) max_step = std::max(max_step, s < 0 ? -s : s);
    // Some geodesic keeps every partial sum within [min(0,v)-M, max(0,v)+M]:
    // whenever the running sum leaves [min(0,v), max(0,v)], the remaining
    // steps sum back toward the target, so a step in the return direction
    // can be scheduled next; one step moves at most M.
    std::int64_t lo = std::min<std::int64_t>(0, value) - max_step;
    std::int64_t hi = std::max<std::int64_t>(0, value) + max_step;
    std::int64_t span = hi - lo + 1;
    if (span > 80000000) throw LimitExceeded("zgens word length target too far from origin");
    std::vector<std::int32_t> seen(static_cast<std::size_t>(span), 0);
    std::vector<std::int64_t> frontier{0};
    std::vector<std::int64_t> next;
    seen[static_cast<std::size_t>(-lo)] = 1;
    for (std::int64_t d = 1; !frontier.empty(); ++d) {
        next.clear();
        for (std::int64_t v : frontier) {
            for (std::int64_t s : steps) {
                std::int64_t w = v + s;
                if (w < lo || w > hi) continue;
                auto& cell = seen[static_cast<std::size_t>(w - lo)];
                if (!cell) {
                    if (w == value) return d;
                    cell = 1;
                    next.push_back(w);
                }
            }
        }
        frontier.swap(next);
    }
    throw Error("zgens BFS window exhausted; generators do not generate the target");
}

MarkedGroup MarkedGroup::build(const std::string& text) {
    return build(parse_group_spec(text));
}

MarkedGroup MarkedGroup::build(GroupSpecPtr spec) {
    if (!spec) throw SemanticError("empty group description");
    if (spec_depth(*spec) > kMaxDepth) throw LimitExceeded("group description deeper than 16");

    MarkedGroup g;
    g.spec_ = spec;
    switch (spec->kind) {
    case ModelKind::Free: {
        if (spec->arg < 1) throw SemanticError("free rank must be >= 1");
        if (spec->arg > kMaxRank) throw LimitExceeded("free rank above 64");
        int k = static_cast<int>(spec->arg);
        for (int i = 1; i <= k; ++i) {
            Element e;
            e.word = {i};
            g.sigma_.push_back(std::move(e));
        }
        for (int i = 1; i <= k; ++i) {
            Element e;
            e.word = {-i};
            g.sigma_.push_back(std::move(e));
        }
        for (int i = 0; i < k; ++i) g.inv_map_.push_back(i + k);
        for (int i = 0; i < k; ++i) g.inv_map_.push_back(i);
        break;
    }
    case ModelKind::ZPow: {
        if (spec->arg < 1) throw SemanticError("zpow rank must be >= 1");
        if (spec->arg > kMaxRank) throw LimitExceeded("zpow rank above 64");
        int n = static_cast<int>(spec->arg);
        for (int sign : {+1, -1}) {
            for (int i = 0; i < n; ++i) {
                Element e;
                e.vec.assign(n, 0);
                e.vec[i] = sign;
                g.sigma_.push_back(std::move(e));
            }
        }
        for (int i = 0; i < n; ++i) g.inv_map_.push_back(i + n);
        for (int i = 0; i < n; ++i) g.inv_map_.push_back(i);
        break;
    }
    case ModelKind::ZGens: {
        if (spec->gens.empty()) throw SemanticError("z needs at least one generator");
        if (static_cast<std::int64_t>(spec->gens.size()) > kMaxZGens)
            throw LimitExceeded("more than 64 z generators");
        for (std::int64_t v : spec->gens) {
            if (v == 0) throw SemanticError("z generators must be nonzero");
            if (std::abs(v) > kMaxZGenAbs) throw LimitExceeded("z generator magnitude above 1e6");
        }
        std::int64_t gcd_abs = 0;
        for (std::int64_t v : spec->gens) gcd_abs = std::gcd(gcd_abs, std::abs(v));
        if (gcd_abs != 1) throw SemanticError("z generators have gcd != 1");
        auto add = [&](std::int64_t v) {
            for (std::int64_t w : g.zgens_sym_)
                if (w == v) return;
            g.zgens_sym_.push_back(v);
            Element e;
            e.vec = {v};
            g.sigma_.push_back(std::move(e));
        };
        for (std::int64_t v : spec->gens) add(v);
        for (std::int64_t v : spec->gens) add(-v);
        g.inv_map_.resize(g.sigma_.size());
        for (std::size_t i = 0; i < g.zgens_sym_.size(); ++i) {
            std::int64_t want = -g.zgens_sym_[i];
            auto it = std::find(g.zgens_sym_.begin(), g.zgens_sym_.end(), want);
            g.inv_map_[i] = static_cast<int>(it - g.zgens_sym_.begin());
        }
        break;
    }
    case ModelKind::CyclicFull: {
        if (spec->arg < 2) throw SemanticError("cyclic modulus must be >= 2");
        if (spec->arg > kMaxModulus) throw LimitExceeded("cyclic modulus above 65536");
        std::int64_t m = spec->arg;
        for (std::int64_t r = 1; r < m; ++r) {
            Element e;
            e.scalar = r;
            g.sigma_.push_back(std::move(e));
        }
        for (std::int64_t r = 1; r < m; ++r)
            g.inv_map_.push_back(static_cast<int>((m - r) - 1));
        break;
    }
    case ModelKind::Prod:
    case ModelKind::FProd: {
        auto lg = std::make_shared<MarkedGroup>(build(spec->left));
        auto rg = std::make_shared<MarkedGroup>(build(spec->right));
        g.left_ = lg;
        g.right_ = rg;
        if (spec->kind == ModelKind::Prod) {
            for (int i = 0; i < lg->sigma_size(); ++i) {
                Element e;
                e.parts = {lg->generator(i), rg->identity()};
                g.sigma_.push_back(std::move(e));
            }
            for (int i = 0; i < rg->sigma_size(); ++i) {
                Element e;
                e.parts = {lg->identity(), rg->generator(i)};
                g.sigma_.push_back(std::move(e));
            }
        } else {
            for (int i = 0; i < lg->sigma_size(); ++i) {
                Element e;
                e.parts = {lg->generator(i)};
                e.tags = {0};
                g.sigma_.push_back(std::move(e));
            }
            for (int i = 0; i < rg->sigma_size(); ++i) {
                Element e;
                e.parts = {rg->generator(i)};
                e.tags = {1};
                g.sigma_.push_back(std::move(e));
            }
        }
        int nl = lg->sigma_size();
        for (int i = 0; i < nl; ++i) g.inv_map_.push_back(lg->inverse_generator(i));
        for (int i = 0; i < rg->sigma_size(); ++i)
            g.inv_map_.push_back(nl + rg->inverse_generator(i));
        break;
    }
    }
    for (const Element& s : g.sigma_) g.sigma_names_.push_back(g.render(s));
    return g;
}

Element MarkedGroup::identity() const {
    Element e;
    switch (kind()) {
    case ModelKind::Free: break;
    case ModelKind::ZPow: e.vec.assign(static_cast<std::size_t>(spec_->arg), 0); break;
    case ModelKind::ZGens: e.vec = {0}; break;
    case ModelKind::CyclicFull: e.scalar = 0; break;
    case ModelKind::Prod: e.parts = {left().identity(), right().identity()}; break;
    case ModelKind::FProd: break;
    }
    return e;
}

bool MarkedGroup::is_identity(const Element& a) const { return a == identity(); }

Element MarkedGroup::multiply(const Element& a, const Element& b) const {
    switch (kind()) {
    case ModelKind::Free: {
        Element r = a;
        for (std::int32_t l : b.word) {
            if (!r.word.empty() && r.word.back() == -l) r.word.pop_back();
            else r.word.push_back(l);
        }
        return r;
    }
    case ModelKind::ZPow: {
        Element r = a;
        for (std::size_t i = 0; i < r.vec.size(); ++i) r.vec[i] += b.vec[i];
        return r;
    }
    case ModelKind::ZGens: {
        Element r;
        r.vec = {a.vec[0] + b.vec[0]};
        return r;
    }
    case ModelKind::CyclicFull: {
        Element r;
        r.scalar = (a.scalar + b.scalar) % spec_->arg;
        return r;
    }
    case ModelKind::Prod: {
        Element r;
        r.parts = {left().multiply(a.parts[0], b.parts[0]),
                   right().multiply(a.parts[1], b.parts[1])};
        return r;
    }
    case ModelKind::FProd: {
        Element r = a;
        for (std::size_t i = 0; i < b.parts.size(); ++i) {
            std::uint8_t tag = b.tags[i];
            const MarkedGroup& factor = tag == 0 ? left() : right();
            if (!r.parts.empty() && r.tags.back() == tag) {
                Element merged = factor.multiply(r.parts.back(), b.parts[i]);
                if (factor.is_identity(merged)) {
                    r.parts.pop_back();
                    r.tags.pop_back();
                } else {
                    r.parts.back() = std::move(merged);
                }
            } else {
                r.parts.push_back(b.parts[i]);
                r.tags.push_back(tag);
            }
        }
        return r;
    }
    }
    throw Error("unreachable model kind");
}

Element MarkedGroup::inverse(const Element& a) const {
    switch (kind()) {
    case ModelKind::Free: {
        Element r;
        r.word.reserve(a.word.size());
        for (auto it = a.word.rbegin(); it != a.word.rend(); ++it) r.word.push_back(-*it);
        return r;
    }
    case ModelKind::ZPow:
    case ModelKind::ZGens: {
        Element r = a;
        for (auto& v : r.vec) v = -v;
        return r;
    }
    case ModelKind::CyclicFull: {
        Element r;
        r.scalar = a.scalar == 0 ? 0 : spec_->arg - a.scalar;
        return r;
    }
    case ModelKind::Prod: {
        Element r;
        r.parts = {left().inverse(a.parts[0]), right().inverse(a.parts[1])};
        return r;
    }
    case ModelKind::FProd: {
        Element r;
        r.parts.reserve(a.parts.size());
        r.tags.reserve(a.tags.size());
        for (std::size_t i = a.parts.size(); i-- > 0;) {
            std::uint8_t tag = a.tags[i];
            const MarkedGroup& factor = tag == 0 ? left() : right();
            r.parts.push_back(factor.inverse(a.parts[i]));
            r.tags.push_back(tag);
        }
        return r;
    }
    }
    throw Error("unreachable model kind");
}

Element MarkedGroup::power(const Element& a, std::int64_t k) const {
    if (k < 0) return power(inverse(a), -k);
    Element acc = identity();
    Element base = a;
    while (k > 0) {
        if (k & 1) acc = multiply(acc, base);
        k >>= 1;
        if (k) base = multiply(base, base);
    }
    return acc;
}

std::int64_t MarkedGroup::exact_word_length(const Element& a) const {
    switch (kind()) {
    case ModelKind::Free: return static_cast<std::int64_t>(a.word.size());
    case ModelKind::ZPow: {
        std::int64_t s = 0;
        for (std::int64_t v : a.vec) s += v < 0 ? -v : v;
        return s;
    }
    case ModelKind::ZGens: return zgens_word_length(zgens_sym_, a.vec[0]);
    case ModelKind::CyclicFull: return a.scalar == 0 ? 0 : 1;
    case ModelKind::Prod:
        return left().exact_word_length(a.parts[0]) + right().exact_word_length(a.parts[1]);
    case ModelKind::FProd: {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < a.parts.size(); ++i) {
            const MarkedGroup& factor = a.tags[i] == 0 ? left() : right();
            s += factor.exact_word_length(a.parts[i]);
        }
        return s;
    }
    }
    throw Error("unreachable model kind");
}

std::string MarkedGroup::render(const Element& a) const {
    switch (kind()) {
    case ModelKind::Free: {
        if (a.word.empty()) return "e";
        std::string s;
        for (std::size_t i = 0; i < a.word.size(); ++i) {
            if (i) s += ' ';
            std::int32_t l = a.word[i];
            s += 'a';
            s += std::to_string(l < 0 ? -l : l);
            if (l < 0) s += '-';
        }
        return s;
    }
    case ModelKind::ZPow: {
        std::string s = "(";
        for (std::size_t i = 0; i < a.vec.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(a.vec[i]);
        }
        return s + ")";
    }
    case ModelKind::ZGens: return std::to_string(a.vec[0]);
    case ModelKind::CyclicFull: return std::to_string(a.scalar);
    case ModelKind::Prod:
        return "(" + left().render(a.parts[0]) + "," + right().render(a.parts[1]) + ")";
    case ModelKind::FProd: {
        if (a.parts.empty()) return "e";
        std::string s;
        for (std::size_t i = 0; i < a.parts.size(); ++i) {
            if (i) s += ' ';
            const MarkedGroup& factor = a.tags[i] == 0 ? left() : right();
            s += a.tags[i] == 0 ? "0:(" : "1:(";
            s += factor.render(a.parts[i]);
            s += ')';
        }
        return s;
    }
    }
    throw Error("unreachable model kind");
}

void MarkedGroup::append_key(const Element& a, std::string& out) const {
    switch (kind()) {
    case ModelKind::Free:
        // Letters lie in [-64,64]\{0}; one byte each.
        for (std::int32_t l : a.word) out.push_back(static_cast<char>(128 + l));
        return;
    case ModelKind::ZPow:
    case ModelKind::ZGens:
        for (std::int64_t v : a.vec) append_le64(v, out);
        return;
    case ModelKind::CyclicFull:
        append_le64(a.scalar, out);
        return;
    case ModelKind::Prod: {
        std::string lk;
        left().append_key(a.parts[0], lk);
        append_le32(static_cast<std::uint32_t>(lk.size()), out);
        out += lk;
        right().append_key(a.parts[1], out);
        return;
    }
    case ModelKind::FProd: {
        append_le32(static_cast<std::uint32_t>(a.parts.size()), out);
        for (std::size_t i = 0; i < a.parts.size(); ++i) {
            out.push_back(static_cast<char>(a.tags[i]));
            std::string ck;
            (a.tags[i] == 0 ? left() : right()).append_key(a.parts[i], ck);
            append_le32(static_cast<std::uint32_t>(ck.size()), out);
            out += ck;
        }
        return;
    }
    }
    throw Error("unreachable model kind");
}

std::string MarkedGroup::element_key(const Element& a) const {
    std::string s;
    append_key(a, s);
    return s;
}

bool MarkedGroup::finite() const {
    switch (kind()) {
    case ModelKind::Free:
    case ModelKind::ZPow:
    case ModelKind::ZGens:
    case ModelKind::FProd: return false;
    case ModelKind::CyclicFull: return true;
    case ModelKind::Prod: return left().finite() && right().finite();
    }
    throw Error("unreachable model kind");
}

BigInt MarkedGroup::order() const {
    if (!finite()) throw WrongModel("order requested for an infinite group");
    if (kind() == ModelKind::CyclicFull) return BigInt(spec_->arg);
    return left().order() * right().order();
}

const MarkedGroup& MarkedGroup::left() const {
    if (!left_) throw WrongModel("group has no left factor");
    return *left_;
}

const MarkedGroup& MarkedGroup::right() const {
    if (!right_) throw WrongModel("group has no right factor");
    return *right_;
}

} // namespace hypgroup
