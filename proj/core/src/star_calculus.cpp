#include "rlcm/star_calculus.hpp"

#include <algorithm>

#include "rlcm/text.hpp"

namespace rlcm {

Monomial mono_multiply(const SemigroupDescriptor& s, const Monomial& m1, const Monomial& m2) {
  if (m1.is_zero() || m2.is_zero()) return Monomial::Zero();
  if (!s.has_right_lcm()) throw std::logic_error("mono_multiply: " + s.name + " has no right LCM");
  auto l = s.right_lcm(m1.q, m2.p);
  if (!l) return Monomial::Zero();
  return Monomial::VV(s.multiply(m1.p, l->left_comp), s.multiply(m2.q, l->right_comp));
}

Monomial mono_adjoint(const Monomial& m) {
  if (m.is_zero()) return m;
  return Monomial::VV(m.q, m.p);
}

bool mono_equal(const SemigroupDescriptor& s, const Monomial& m1, const Monomial& m2) {
  if (m1.is_zero() || m2.is_zero()) return m1.is_zero() && m2.is_zero();
  auto u = s.left_divide(m1.p, m2.p);
  if (!u || !s.is_unit(*u)) return false;
  return s.multiply(m1.q, *u) == m2.q;
}

std::string mono_text(const SemigroupDescriptor& s, const Monomial& m) {
  if (m.is_zero()) return "0";
  return "v(" + s.display(m.p) + ") v(" + s.display(m.q) + ")*";
}

SemigroupDescriptor with_brute_lcm(SemigroupDescriptor s, Ball ball) {
  s.right_lcm = [desc = s, ball = std::move(ball)](const Element& p, const Element& q) {
    return brute_right_lcm(desc, p, q, ball);
  };
  return s;
}

Monomial token_monomial(const SemigroupDescriptor& s, const Token& t) {
  switch (t.kind) {
    case TokenKind::V:
      return Monomial::VV(t.element, s.identity);
    case TokenKind::VStar:
      return Monomial::VV(s.identity, t.element);
    case TokenKind::E:
      return Monomial::VV(t.element, t.element);
  }
  return Monomial::Zero();
}

Monomial word_normalize(const SemigroupDescriptor& s, const std::vector<Token>& word) {
  Monomial acc = Monomial::VV(s.identity, s.identity);
  for (const auto& t : word) acc = mono_multiply(s, acc, token_monomial(s, t));
  return acc;
}

namespace {

Element parse_argument(const std::function<Element(std::string_view)>& parse, const std::string& arg,
                       std::size_t offset) {
  try {
    return parse(arg);
  } catch (const ParseError& first) {
    try {
      return parse("(" + arg + ")");
    } catch (const ParseError&) {
      throw ParseError(std::string("bad token argument: ") + first.what(), offset + first.position(),
                       first.expected());
    }
  }
}

}  // namespace

std::vector<Token> parse_word(const WordContext& ctx, std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i == text.size()) throw ParseError("empty word", 0, "token");
  while (i < text.size()) {
    const char kind = text[i];
    if (kind != 'v' && kind != 't' && kind != 's' && kind != 'e') {
      throw ParseError("unknown token", i, "v(, t(, s( or e(");
    }
    ++i;
    if (i >= text.size() || text[i] != '(') throw ParseError("missing '('", i, "'('");
    const auto open = i;
    int depth = 0;
    for (; i < text.size(); ++i) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')' && --depth == 0) break;
    }
    if (i >= text.size()) throw ParseError("unbalanced parentheses", open, "')'");
    const std::string arg(text.substr(open + 1, i - open - 1));
    ++i;
    bool star = false;
    if (i < text.size() && text[i] == '*') {
      star = true;
      ++i;
    }
    std::function<Element(std::string_view)> parse = ctx.semigroup.parse;
    if (kind == 't') parse = ctx.parse_t;
    if (kind == 's') parse = ctx.parse_s;
    if (!parse) throw ParseError(std::string("token ") + kind + "(...) not available for " + ctx.semigroup.name, open - 1, "v( or e(");
    if (kind == 'e' && star) throw ParseError("projection takes no '*'", i - 1, "whitespace");
    Token t;
    t.element = parse_argument(parse, arg, open + 1);
    t.kind = kind == 'e' ? TokenKind::E : (star ? TokenKind::VStar : TokenKind::V);
    out.push_back(std::move(t));
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
      throw ParseError("tokens must be separated by whitespace", i, "whitespace");
    }
    skip();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Foundation sets

FoundationVerdict is_foundation_exact(const SemigroupDescriptor& s, const std::vector<Element>& f) {
  if (s.name.rfind("free:", 0) != 0) throw ModeUnsupported("exact foundation check needs a free monoid, got " + s.name);
  if (f.empty()) return {FoundationStatus::NotFoundation, s.identity, 0};
  const auto k = static_cast<std::int64_t>(s.generators.size());
  std::size_t n = 0;
  for (const auto& q : f) n = std::max(n, q.size());
  FoundationVerdict v;
  std::vector<std::int64_t> w(n, 0);
  for (;;) {
    ++v.checked;
    const bool covered = std::any_of(f.begin(), f.end(), [&](const Element& q) {
      return std::equal(q.code.begin(), q.code.end(), w.begin());  // |q| <= n, so q prefix of w
    });
    if (!covered) {
      v.status = FoundationStatus::NotFoundation;
      v.witness = Element(w);
      return v;
    }
    // Next word in lexicographic order.
    std::size_t pos = n;
    while (pos > 0 && w[pos - 1] == k - 1) w[--pos] = 0;
    if (pos == 0) break;
    ++w[pos - 1];
  }
  return v;
}

FoundationVerdict is_foundation_bounded(const SemigroupDescriptor& s, const std::vector<Element>& f,
                                        const Ball& ball) {
  if (f.empty()) return {FoundationStatus::NotFoundation, s.identity, 0};
  FoundationVerdict v;
  std::optional<Element> undecided;
  for (const auto& p : ball) {
    ++v.checked;
    bool meets = false;
    bool all_certain = true;
    for (const auto& q : f) {
      if (s.has_right_lcm()) {
        if (s.right_lcm(p, q)) {
          meets = true;
          break;
        }
        continue;
      }
      const bool common = std::any_of(ball.begin(), ball.end(), [&](const Element& r) {
        return s.left_divide(p, r) && s.left_divide(q, r);
      });
      if (common) {
        meets = true;
        break;
      }
      all_certain = false;
    }
    if (meets) continue;
    if (all_certain) {
      v.status = FoundationStatus::NotFoundation;
      v.witness = p;
      return v;
    }
    if (!undecided) undecided = p;
  }
  if (undecided) {
    v.status = FoundationStatus::UndecidedBeyondBall;
    v.witness = undecided;
  }
  return v;
}

TransferResult foundation_transfer_a(const ZSDescriptor& d, const Element& a, int radius) {
  const auto s = zs_product(d);
  TransferResult r;
  r.set = {zs_encode({d.U.identity, a})};
  r.verdict = is_foundation_bounded(s, r.set, enumerate_ball(s, radius));
  return r;
}

TransferResult foundation_transfer_b(const ZSDescriptor& d, const std::vector<Element>& f, int radius) {
  const auto s = zs_product(d);
  TransferResult r;
  for (const auto& u : f) r.set.push_back(zs_encode({u, d.A.identity}));
  r.verdict = is_foundation_bounded(s, r.set, enumerate_ball(s, radius));
  return r;
}

TransferResult foundation_transfer_c(const ZSDescriptor& d, const std::vector<Element>& g, int radius) {
  TransferResult r;
  for (const auto& p : g) {
    auto u = zs_decode(p).u;
    if (std::find(r.set.begin(), r.set.end(), u) == r.set.end()) r.set.push_back(std::move(u));
  }
  if (d.U.name.rfind("free:", 0) == 0) {
    r.verdict = is_foundation_exact(d.U, r.set);
  } else {
    r.verdict = is_foundation_bounded(d.U, r.set, enumerate_ball(d.U, radius));
  }
  return r;
}

std::vector<Element> grow_foundation_set(const SemigroupDescriptor& s, const std::vector<Element>& family,
                                         int splits, std::mt19937_64& rng) {
  std::vector<Element> set{s.identity};
  for (int k = 0; k < splits; ++k) {
    std::uniform_int_distribution<std::size_t> pick(0, set.size() - 1);
    const auto i = pick(rng);
    const Element f = set[i];
    set.erase(set.begin() + static_cast<std::ptrdiff_t>(i));
    for (const auto& c : family) set.push_back(s.multiply(f, c));
  }
  return set;
}

}  // namespace rlcm
