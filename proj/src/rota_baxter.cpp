#include "opgroup/rota_baxter.hpp"

#include <stdexcept>
#include <vector>

#include "opgroup/error.hpp"

namespace opgroup {

namespace {

class Guard {
 public:
  explicit Guard(std::size_t limit) : limit_(limit) {}

  void tick() {
    if (++steps_ > limit_) {
      throw RecursionGuardExceeded("diamond exceeded " + std::to_string(limit_) + " merge steps");
    }
  }

 private:
  std::size_t steps_ = 0;
  std::size_t limit_;
};

// Case 1 and Case 2, parameterized by the product used for the recursive
// calls so that both product routes share only the defining formulas.

template <class Product>
Word ad_impl(const Atom& u, const Word& vbar, Product& prod) {
  const Word uw = Word::of(u);
  const std::size_t k = vbar.size();
  if (k == 0) return Word();
  const Atom& last = vbar[k - 1];
  if (last.is_negative_bracket()) {
    // (u <> v1) v2 ... v_{k-1} (u <> v_k')^-1, with u alone in front when k = 1.
    Word prefix = k == 1 ? uw : prod(uw, Word::of(vbar[0]));
    std::vector<Atom> middle;
    for (std::size_t i = 1; i + 1 < k; ++i) middle.push_back(vbar[i]);
    Word suffix = inv(prod(uw, Word::of(last.inverse())));
    return prod(prod(prefix, Word::from_reduced(std::move(middle))), suffix);
  }
  return prod(prod(uw, vbar), Word::of(u.inverse()));
}

template <class Product>
Atom merge_positive(const Atom& u, const Atom& v, Product& prod) {
  return Atom::bracket(prod(u.body(), ad_impl(u, v.body(), prod)));
}

template <class Product>
Atom merge_negative(const Atom& u, const Atom& v, Product& prod) {
  return merge_positive(v.inverse(), u.inverse(), prod).inverse();
}

// Route 1: push the atoms of v onto u one at a time; each push cancels or
// merges with the top and re-examines the new top.
class SeamProduct {
 public:
  explicit SeamProduct(Guard& guard) : guard_(guard) {}

  Word operator()(const Word& u, const Word& v) {
    if (u.is_identity()) return v;
    if (v.is_identity()) return u;
    std::vector<Atom> stack = u.atom_vector();
    for (const Atom& a : v.atoms()) push(stack, a);
    return Word::from_reduced(std::move(stack));
  }

 private:
  void push(std::vector<Atom>& stack, Atom a) {
    while (!stack.empty()) {
      const Atom& top = stack.back();
      if (top.is_inverse_of(a)) {
        stack.pop_back();
        return;
      }
      const bool both_pos = top.is_positive_bracket() && a.is_positive_bracket();
      const bool both_neg = top.is_negative_bracket() && a.is_negative_bracket();
      if (!both_pos && !both_neg) break;
      guard_.tick();
      Atom left = top;
      stack.pop_back();
      a = both_pos ? merge_positive(left, a, *this) : merge_negative(left, a, *this);
    }
    stack.push_back(std::move(a));
  }

  Guard& guard_;
};

// Route 2: leftmost-redex rewriting of the concatenation to a fixpoint.
class RewriteProduct {
 public:
  explicit RewriteProduct(Guard& guard) : guard_(guard) {}

  Word operator()(const Word& u, const Word& v) {
    std::vector<Atom> seq = u.atom_vector();
    seq.insert(seq.end(), v.atoms().begin(), v.atoms().end());
    while (rewrite_once(seq)) {
    }
    return Word::from_reduced(std::move(seq));
  }

 private:
  bool rewrite_once(std::vector<Atom>& seq) {
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      const Atom& a = seq[i];
      const Atom& b = seq[i + 1];
      if (a.is_inverse_of(b)) {  // R1
        seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(i),
                  seq.begin() + static_cast<std::ptrdiff_t>(i + 2));
        return true;
      }
      if (a.is_positive_bracket() && b.is_positive_bracket()) {  // R2
        guard_.tick();
        Atom merged = merge_positive(a, b, *this);
        seq[i] = std::move(merged);
        seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(i + 1));
        return true;
      }
      if (a.is_negative_bracket() && b.is_negative_bracket()) {  // R3
        guard_.tick();
        Atom merged = merge_negative(a, b, *this);
        seq[i] = std::move(merged);
        seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(i + 1));
        return true;
      }
    }
    return false;
  }

  Guard& guard_;
};

void require_rb(const Word& w, const char* what) {
  if (auto v = rb_violation(w)) {
    throw NotRbWord(std::string(what) + " is not a Rota-Baxter word: " + *v);
  }
}

std::optional<std::string> violation_at(const Word& w, const std::string& context) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const Atom& a = w[i];
    const Atom& b = w[i + 1];
    if ((a.is_positive_bracket() && b.is_positive_bracket()) ||
        (a.is_negative_bracket() && b.is_negative_bracket())) {
      std::string msg = std::string("adjacent ") +
                        (a.sign() == Sign::kPlus ? "positive" : "negative") +
                        " brackets '" + to_string(a) + "' and '" + to_string(b) + "'";
      if (!context.empty()) msg += " inside '" + context + "'";
      return msg;
    }
  }
  for (const Atom& a : w.atoms()) {
    if (!a.is_bracket()) continue;
    if (auto inner = violation_at(a.body(), to_string(a))) return inner;
  }
  return std::nullopt;
}

}  // namespace

bool is_rb_word(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i].is_bracket() && w[i + 1].is_bracket() && w[i].sign() == w[i + 1].sign()) {
      return false;
    }
  }
  for (const Atom& a : w.atoms()) {
    if (a.is_bracket() && !is_rb_word(a.body())) return false;
  }
  return true;
}

std::optional<std::string> rb_violation(const Word& w) { return violation_at(w, ""); }

Word diamond(const Word& u, const Word& v, DiamondOptions options) {
  require_rb(u, "left factor");
  require_rb(v, "right factor");
  Guard guard(options.step_limit);
  SeamProduct prod(guard);
  return prod(u, v);
}

Word diamond_rewrite(const Word& u, const Word& v, DiamondOptions options) {
  require_rb(u, "left factor");
  require_rb(v, "right factor");
  Guard guard(options.step_limit);
  RewriteProduct prod(guard);
  return prod(u, v);
}

Word ad_diamond(const Atom& u, const Word& vbar, DiamondOptions options) {
  if (!u.is_positive_bracket()) {
    throw std::invalid_argument("ad_diamond: '" + to_string(u) + "' is not a positive bracket");
  }
  require_rb(u.body(), "bracket body");
  require_rb(vbar, "argument");
  Guard guard(options.step_limit);
  SeamProduct prod(guard);
  return ad_impl(u, vbar, prod);
}

Word rb_op(const Word& w) { return bracket(w); }

Word rb_inv(const Word& w) { return inv(w); }

}  // namespace opgroup
