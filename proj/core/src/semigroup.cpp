#include "rlcm/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_set>

namespace rlcm {

std::optional<std::size_t> Ball::index_of(const Element& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Ball::length_of(const Element& e) const {
  auto it = index_.find(e);
  return it == index_.end() ? std::numeric_limits<int>::max() : lengths_[it->second];
}

void Ball::push(Element e, int length) {
  index_.emplace(e, elements_.size());
  elements_.push_back(std::move(e));
  lengths_.push_back(length);
}

Ball Ball::from_elements(int radius, std::vector<Element> elements, std::vector<int> lengths) {
  if (elements.size() != lengths.size()) {
    throw std::invalid_argument("Ball::from_elements: size mismatch");
  }
  std::vector<std::size_t> order(elements.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (lengths[a] != lengths[b]) return lengths[a] < lengths[b];
    return elements[a] < elements[b];
  });
  Ball ball;
  ball.radius_ = radius;
  for (auto i : order) {
    if (!ball.contains(elements[i])) ball.push(std::move(elements[i]), lengths[i]);
  }
  return ball;
}

std::optional<Element> left_divide(const SemigroupDescriptor& s, const Element& p, const Element& r) {
  return s.left_divide(p, r);
}

Ball enumerate_ball(const SemigroupDescriptor& s, int radius) {
  if (radius < 0) throw std::invalid_argument("enumerate_ball: negative radius");
  Ball ball;
  ball.radius_ = radius;
  ball.push(s.identity, 0);
  std::vector<Element> frontier{s.identity};
  for (int len = 1; len <= radius && !frontier.empty(); ++len) {
    std::vector<Element> next;
    std::unordered_set<Element, ElementHash> seen;
    for (const auto& w : frontier) {
      for (const auto& g : s.generators) {
        Element p = s.multiply(w, g);
        if (ball.contains(p) || seen.contains(p)) continue;
        seen.insert(p);
        next.push_back(std::move(p));
      }
    }
    std::sort(next.begin(), next.end());
    for (const auto& p : next) ball.push(p, len);
    frontier = std::move(next);
  }
  return ball;
}

LcmSearch search_right_lcm(const SemigroupDescriptor& s, const Element& p, const Element& q,
                           const Ball& ball) {
  struct Common {
    std::size_t index;
    Element p_comp;
    Element q_comp;
  };
  std::vector<Common> common;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    auto pc = s.left_divide(p, ball[i]);
    if (!pc) continue;
    auto qc = s.left_divide(q, ball[i]);
    if (!qc) continue;
    common.push_back({i, std::move(*pc), std::move(*qc)});
  }
  if (common.empty()) return {SearchStatus::Disjoint, std::nullopt};

  int best_len = std::numeric_limits<int>::max();
  for (const auto& c : common) best_len = std::min(best_len, ball.length_at(c.index));
  const Common* best = nullptr;
  std::string best_text;
  for (const auto& c : common) {
    if (ball.length_at(c.index) != best_len) continue;
    std::string text = s.display(ball[c.index]);
    if (best == nullptr || text < best_text) {
      best = &c;
      best_text = std::move(text);
    }
  }

  LcmWitness w{ball[best->index], best->p_comp, best->q_comp};
  if (best_len >= ball.radius()) return {SearchStatus::BallTooSmall, w};
  for (const auto& c : common) {
    if (!s.left_divide(w.lcm, ball[c.index])) return {SearchStatus::BallTooSmall, w};
  }
  return {SearchStatus::Found, w};
}

RightLcmResult brute_right_lcm(const SemigroupDescriptor& s, const Element& p, const Element& q,
                               const Ball& ball) {
  auto found = search_right_lcm(s, p, q, ball);
  if (found.status == SearchStatus::BallTooSmall) {
    throw BallTooSmall("cannot certify right LCM of " + s.display(p) + " and " + s.display(q) +
                       " within radius " + std::to_string(ball.radius()));
  }
  return found.result;
}

bool equal_up_to_units(const SemigroupDescriptor& s, const Element& r1, const Element& r2) {
  auto u = s.left_divide(r1, r2);
  if (!u || !s.is_unit(*u)) return false;
  auto w = s.left_divide(r2, r1);
  return w && s.is_unit(*w);
}

bool CheckReport::has_failure(std::string_view check) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.check == check; });
}

namespace {

std::string tuple_text(const SemigroupDescriptor& s, std::initializer_list<const Element*> xs) {
  std::string out;
  for (const auto* x : xs) {
    if (!out.empty()) out += ' ';
    out += s.display(*x);
  }
  return out;
}

}  // namespace

CheckReport check_cancellativity_and_lcm(const SemigroupDescriptor& s, const Ball& ball) {
  CheckReport report;
  report.suite = "cancellativity-lcm:" + s.name;
  const auto& el = ball.elements();

  for (const auto& p : el) {
    ++report.compared;
    if (s.multiply(s.identity, p) != p || s.multiply(p, s.identity) != p) {
      report.fail("identity", s.display(p));
    }
  }

  std::vector<std::vector<Element>> table(el.size());
  for (std::size_t i = 0; i < el.size(); ++i) {
    table[i].reserve(el.size());
    for (std::size_t j = 0; j < el.size(); ++j) table[i].push_back(s.multiply(el[i], el[j]));
  }

  for (std::size_t i = 0; i < el.size(); ++i) {
    for (std::size_t j = 0; j < el.size(); ++j) {
      for (std::size_t k = 0; k < el.size(); ++k) {
        ++report.compared;
        if (s.multiply(table[i][j], el[k]) != s.multiply(el[i], table[j][k])) {
          report.fail("associativity", tuple_text(s, {&el[i], &el[j], &el[k]}));
        }
      }
    }
  }

  for (std::size_t i = 0; i < el.size(); ++i) {
    std::unordered_map<Element, std::size_t, ElementHash> seen;
    for (std::size_t j = 0; j < el.size(); ++j) {
      ++report.compared;
      auto [it, inserted] = seen.emplace(table[i][j], j);
      if (!inserted) {
        report.fail("left-cancellativity", tuple_text(s, {&el[i], &el[it->second], &el[j]}));
      }
      auto back = s.left_divide(el[i], table[i][j]);
      if (inserted && (!back || *back != el[j])) {
        report.fail("left-divide", tuple_text(s, {&el[i], &el[j]}));
      }
    }
  }

  if (!s.has_right_lcm()) return report;

  for (std::size_t i = 0; i < el.size(); ++i) {
    for (std::size_t j = 0; j < el.size(); ++j) {
      const auto& p = el[i];
      const auto& q = el[j];
      auto closed = s.right_lcm(p, q);
      if (closed) {
        if (s.multiply(p, closed->left_comp) != closed->lcm ||
            s.multiply(q, closed->right_comp) != closed->lcm) {
          report.fail("lcm-witness", tuple_text(s, {&p, &q}));
          continue;
        }
      }
      auto brute = search_right_lcm(s, p, q, ball);
      switch (brute.status) {
        case SearchStatus::BallTooSmall:
          ++report.skipped;
          break;
        case SearchStatus::Disjoint:
          if (closed && ball.contains(closed->lcm)) {
            report.fail("lcm-disjoint", tuple_text(s, {&p, &q}));
          } else if (closed) {
            ++report.skipped;
          } else {
            ++report.compared;
          }
          break;
        case SearchStatus::Found:
          ++report.compared;
          if (!closed || !equal_up_to_units(s, closed->lcm, brute.result->lcm)) {
            report.fail("lcm-agreement", tuple_text(s, {&p, &q}));
          }
          break;
      }
    }
  }
  return report;
}

}  // namespace rlcm
