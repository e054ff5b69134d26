#include "rlcm/regular_rep.hpp"

#include <functional>
#include <memory>
#include <string>
#include <unordered_map>

namespace rlcm {

PartialInjectionTable rep_generator(const SemigroupDescriptor& s, const Element& p, const Ball& ball) {
  PartialInjectionTable t;
  t.forward.reserve(ball.size());
  t.adjoint.reserve(ball.size());
  for (const auto& q : ball) {
    auto i = ball.index_of(s.multiply(p, q));
    t.forward.push_back(i ? EvalOutcome::defined(*i) : EvalOutcome::escaped());
    auto d = s.left_divide(p, q);
    if (!d) {
      t.adjoint.push_back(EvalOutcome::killed());
    } else {
      auto j = ball.index_of(*d);
      t.adjoint.push_back(j ? EvalOutcome::defined(*j) : EvalOutcome::escaped());
    }
  }
  return t;
}

PartialInjectionTable rep_adjoint(const PartialInjectionTable& t) { return {t.adjoint, t.forward}; }

EvalOutcome rep_compose(const std::vector<const std::vector<EvalOutcome>*>& word, std::size_t basis_index) {
  EvalOutcome cur = EvalOutcome::defined(basis_index);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (cur.kind != OutcomeKind::Defined) break;
    cur = (**it)[cur.index];
  }
  return cur;
}

EvalOutcome mono_apply(const SemigroupDescriptor& s, const Monomial& m, const Ball& ball, std::size_t basis_index) {
  if (m.is_zero()) return EvalOutcome::killed();
  auto d = s.left_divide(m.q, ball[basis_index]);
  if (!d) return EvalOutcome::killed();
  auto i = ball.index_of(s.multiply(m.p, *d));
  return i ? EvalOutcome::defined(*i) : EvalOutcome::escaped();
}

namespace {

class TableCache {
 public:
  TableCache(const SemigroupDescriptor& s, const Ball& ball) : s_(s), ball_(ball) {}

  const std::vector<EvalOutcome>* fwd(const Element& p) { return &get(p).forward; }
  const std::vector<EvalOutcome>* adj(const Element& p) { return &get(p).adjoint; }

 private:
  const PartialInjectionTable& get(const Element& p) {
    auto it = cache_.find(p);
    if (it == cache_.end()) it = cache_.emplace(p, rep_generator(s_, p, ball_)).first;
    return it->second;
  }

  const SemigroupDescriptor& s_;
  const Ball& ball_;
  std::unordered_map<Element, PartialInjectionTable, ElementHash> cache_;
};

using Word = std::vector<const std::vector<EvalOutcome>*>;

/// Compares two operator words on every basis vector. A null `rhs` is zero.
void compare(CheckReport& r, const Ball& ball, const std::string& relation, const std::string& params,
             const Word& lhs, const Word* rhs, const SemigroupDescriptor& s) {
  for (std::size_t i = 0; i < ball.size(); ++i) {
    const auto a = rep_compose(lhs, i);
    const auto b = rhs ? rep_compose(*rhs, i) : EvalOutcome::killed();
    if (a.kind == OutcomeKind::Escaped || b.kind == OutcomeKind::Escaped) {
      ++r.skipped;
      continue;
    }
    ++r.compared;
    if (a != b) r.fail(relation, params + " @ " + s.display(ball[i]));
  }
}

}  // namespace

CheckReport verify_relations(const SemigroupDescriptor& s, const Ball& ball, RelationSuite suite,
                             const ZSDescriptor* zs) {
  CheckReport r;
  TableCache tc(s, ball);
  const Word identity;
  switch (suite) {
    case RelationSuite::Li: {
      r.suite = "li:" + s.name;
      compare(r, ball, "L3", s.display(s.identity), {tc.fwd(s.identity), tc.adj(s.identity)}, &identity, s);
      for (const auto& p : ball) {
        const auto ptext = s.display(p);
        compare(r, ball, "isometry", ptext, {tc.adj(p), tc.fwd(p)}, &identity, s);
        for (const auto& q : ball) {
          const auto params = ptext + " " + s.display(q);
          const auto pq = s.multiply(p, q);
          const Word l1_rhs{tc.fwd(pq)};
          compare(r, ball, "L1", params, {tc.fwd(p), tc.fwd(q)}, &l1_rhs, s);
          const Word l2_rhs{tc.fwd(pq), tc.adj(pq)};
          compare(r, ball, "L2", params, {tc.fwd(p), tc.fwd(q), tc.adj(q), tc.adj(p)}, &l2_rhs, s);
          auto l = s.right_lcm(p, q);
          const Word meet = l ? Word{tc.fwd(l->lcm), tc.adj(l->lcm)} : Word{};
          compare(r, ball, "L4", params, {tc.fwd(p), tc.adj(p), tc.fwd(q), tc.adj(q)}, l ? &meet : nullptr, s);
        }
      }
      break;
    }
    case RelationSuite::Covariance: {
      r.suite = "covariance:" + s.name;
      for (const auto& p : ball) {
        for (const auto& q : ball) {
          auto l = s.right_lcm(p, q);
          const Word rhs = l ? Word{tc.fwd(l->left_comp), tc.adj(l->right_comp)} : Word{};
          compare(r, ball, "covariance", s.display(p) + " " + s.display(q), {tc.adj(p), tc.fwd(q)},
                  l ? &rhs : nullptr, s);
        }
      }
      break;
    }
    case RelationSuite::K: {
      if (zs == nullptr) throw std::invalid_argument("verify_relations: K suite needs Zappa-Szep data");
      r.suite = "K:" + s.name;
      const auto& d = *zs;
      std::vector<Element> as;
      std::vector<Element> us;
      for (const auto& p : ball) {
        const auto z = zs_decode(p);
        if (z.u == d.U.identity) as.push_back(z.a);
        if (z.a == d.A.identity) us.push_back(z.u);
      }
      auto t = [&](const Element& u) { return zs_encode({u, d.A.identity}); };
      auto sa = [&](const Element& a) { return zs_encode({d.U.identity, a}); };
      for (const auto& a : as) {
        for (const auto& u : us) {
          const auto params = d.A.display(a) + " " + d.U.display(u);
          const Word k1_rhs{tc.fwd(t(d.action(a, u))), tc.fwd(sa(d.restriction(a, u)))};
          compare(r, ball, "K1", params, {tc.fwd(sa(a)), tc.fwd(t(u))}, &k1_rhs, s);
          const auto z = d.action_inverse(a, u);
          const Word k2_rhs{tc.fwd(t(z)), tc.adj(sa(d.restriction(a, z)))};
          compare(r, ball, "K2", params, {tc.adj(sa(a)), tc.fwd(t(u))}, &k2_rhs, s);
        }
      }
      break;
    }
  }
  return r;
}

namespace {

void check_word(CheckReport& r, const SemigroupDescriptor& s, const std::vector<Token>& word, const Ball& ball,
                TableCache& tc) {
  const auto m = word_normalize(s, word);
  Word ops;
  std::string text;
  for (const auto& tok : word) {
    switch (tok.kind) {
      case TokenKind::V:
        ops.push_back(tc.fwd(tok.element));
        text += "v(" + s.display(tok.element) + ")";
        break;
      case TokenKind::VStar:
        ops.push_back(tc.adj(tok.element));
        text += "v(" + s.display(tok.element) + ")*";
        break;
      case TokenKind::E:
        ops.push_back(tc.fwd(tok.element));
        ops.push_back(tc.adj(tok.element));
        text += "e(" + s.display(tok.element) + ")";
        break;
    }
    text += ' ';
  }
  for (std::size_t i = 0; i < ball.size(); ++i) {
    const auto a = rep_compose(ops, i);
    const auto b = mono_apply(s, m, ball, i);
    if (a.kind == OutcomeKind::Escaped || b.kind == OutcomeKind::Escaped) {
      ++r.skipped;
      continue;
    }
    ++r.compared;
    if (a != b) r.fail("monomial", text + "@ " + s.display(ball[i]));
  }
}

}  // namespace

CheckReport oracle_check_monomial(const SemigroupDescriptor& s, const std::vector<Token>& word, const Ball& ball) {
  CheckReport r;
  r.suite = "monomial-oracle:" + s.name;
  TableCache tc(s, ball);
  check_word(r, s, word, ball, tc);
  return r;
}

CheckReport oracle_check_words(const SemigroupDescriptor& s, const std::vector<Element>& tokens, int max_len,
                               const Ball& basis, std::size_t samples, std::mt19937_64& rng) {
  CheckReport r;
  r.suite = "monomial-oracle:" + s.name;
  TableCache tc(s, basis);
  std::vector<Token> alphabet;
  for (const auto& p : tokens) {
    alphabet.push_back({TokenKind::V, p});
    alphabet.push_back({TokenKind::VStar, p});
  }
  if (samples == 0) {
    std::vector<Token> word;
    std::function<void(int)> rec = [&](int depth) {
      if (depth > 0) check_word(r, s, word, basis, tc);
      if (depth == max_len) return;
      for (const auto& t : alphabet) {
        word.push_back(t);
        rec(depth + 1);
        word.pop_back();
      }
    };
    rec(0);
  } else {
    std::uniform_int_distribution<int> len(1, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    for (std::size_t k = 0; k < samples; ++k) {
      std::vector<Token> word(static_cast<std::size_t>(len(rng)));
      for (auto& t : word) t = alphabet[pick(rng)];
      check_word(r, s, word, basis, tc);
    }
  }
  return r;
}

}  // namespace rlcm
