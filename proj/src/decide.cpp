#include "ppg/decide.hpp"

#include <cstdlib>
#include <functional>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ppg {

namespace {

constexpr uint64_t kCheckSeed = 0x9e3779b97f4a7c15ull;

// Exposure with the witness extension: an extension of s meeting no other
// subscript, or nullopt when s is not exposed.
std::optional<Bits> exposure_witness(const Bits& s, const StandardForm& form) {
  std::vector<Bits> subs;
  for (const Letter& l : form.y_part()) subs.push_back(l.gen.sub);
  std::function<std::optional<Bits>(const Bits&)> search =
      [&](const Bits& u) -> std::optional<Bits> {
    bool any = false;
    for (const Bits& t : subs) {
      auto rel = prefix_relation(t, u);
      if (rel == PrefixRel::incompatible) continue;
      if (is_prefix(t, s)) continue;
      any = true;
      if (rel == PrefixRel::equal || rel == PrefixRel::prefix) return std::nullopt;
    }
    if (!any) return u;
    if (auto w = search(u.cat(Bits{0}))) return w;
    return search(u.cat(Bits{1}));
  };
  return search(s);
}

Seq apply_y_power(const Seq& xi, long n) {
  Seq cur = xi;
  for (long i = 0; i < labs(n); ++i) cur = apply_y(cur, n > 0 ? 1 : -1);
  return cur;
}

}  // namespace

Witness non_f_witness(const StandardForm& form, bool require_pure_y) {
  if (form.pure_x()) throw error("X-words have no witness");
  if (require_pure_y && !form.x_part().empty())
    throw error("form has a nonempty X-part");

  auto exponent_of = [&](const Bits& s) -> std::optional<long> {
    for (const Letter& l : form.y_part())
      if (l.gen.sub == s) return l.exp;
    return std::nullopt;
  };

  // The recursive prefix construction from the evaluation argument: descend
  // through occurring subscripts, stepping toward the expansion child until
  // an exposed subscript lets the path escape.
  Bits u = form.y_part().back().gen.sub;
  for (std::size_t guard = 0;; ++guard) {
    if (guard > 10000) throw error("witness prefix construction ran away");
    if (auto w = exposure_witness(u, form)) {
      u = w->cat(Bits{0});  // one extra digit clears every subscript
      break;
    }
    auto e = exponent_of(u);
    if (!e) throw error("witness construction left the subscript tree");
    u = u.cat(Bits{e > 0 ? 0 : 1});
    if (!exponent_of(u))
      throw error("form is not sufficiently expanded at " + u.str());
  }

  // Insert y^{n_i} after each occurring prefix of u.
  std::vector<BSym> syms;
  for (std::size_t i = 0; i <= u.size(); ++i) {
    if (i > 0) syms.push_back(u[i - 1] ? BSym::d1 : BSym::d0);
    if (auto e = exponent_of(u.restrict_to(i)))
      for (long k = 0; k < labs(*e); ++k) syms.push_back(*e > 0 ? BSym::yp : BSym::yn);
  }
  BWord lambda(std::move(syms));
  if (has_potential_cancellation(lambda))
    throw error("insertion word has a potential cancellation");

  AdvanceToPower adv = advance_to_power(lambda);
  Bits u_final = u.cat(adv.appended);
  Bits v = adv.prefix;
  std::size_t n = adv.n;

  if (!form.x_part().empty()) {
    Word xinv = form.x_part().inverse();
    for (std::size_t guard = 0;; ++guard) {
      if (guard > 1000) throw error("witness prefix absorption ran away");
      if (auto w0 = partial_apply_word(u_final, xinv)) {
        u_final = *w0;
        break;
      }
      // appending 1 sends v to v 1^{2^n}
      u_final = u_final.cat(Bits{1});
      for (std::size_t k = 0; k < (static_cast<std::size_t>(1) << n); ++k)
        v = v.cat(Bits{1});
    }
  }
  return Witness{u_final, v, n};
}

bool validate_witness(const Word& w, const Witness& wit, std::size_t samples,
                      std::mt19937_64& rng) {
  for (std::size_t i = 0; i < samples; ++i) {
    Seq xi = random_seq(rng);
    Seq got = evaluate(w, xi.prepend(wit.u));
    Seq want = apply_y_power(xi, static_cast<long>(wit.n)).prepend(wit.v);
    if (!(got == want)) return false;
  }
  // the discriminating sequence and its tail-inequivalent image
  std::vector<uint8_t> per(( static_cast<std::size_t>(1) << wit.n) + 1, 0);
  per.back() = 1;
  Seq star(Bits{}, Bits(std::move(per)));
  Seq in = star.prepend(wit.u);
  Seq out = evaluate(w, in);
  if (!(out == apply_y_power(star, static_cast<long>(wit.n)).prepend(wit.v))) return false;
  return !tail_equivalent(in, out);
}

Verdict decide_identity(const Word& w, bool with_trace) {
  Verdict v;
  Trace trace;
  Trace* tp = with_trace ? &trace : nullptr;
  StandardForm form = sufficiently_expand(to_standard_form(w, 0, tp), tp);
  v.reduced_form = form;
  if (with_trace) v.trace = std::move(trace);

  std::mt19937_64 rng(kCheckSeed);
  if (!form.pure_x()) {
    Witness wit = non_f_witness(form);
    if (!validate_witness(w, wit, 20, rng))
      throw error("internal check failed: witness does not match the word");
    v.is_identity = false;
    v.witness = wit;
    return v;
  }
  TreePair pair = word_to_pair(form.x_part()).reduced();
  v.is_identity = pair.is_trivial();
  if (v.is_identity) {
    for (int i = 0; i < 20; ++i) {
      Seq xi = random_seq(rng);
      if (!(evaluate(w, xi) == xi))
        throw error("internal check failed: identity verdict moved " + xi.str());
    }
  } else {
    // exhibit a moved sequence from the first differing leaf
    bool moved = false;
    for (std::size_t i = 0; i < pair.source.size() && !moved; ++i) {
      if (pair.source[i] == pair.target[i]) continue;
      for (const Seq& tail : {Seq::constant(0), Seq::constant(1),
                              Seq(Bits{}, Bits{0, 1})}) {
        Seq in = tail.prepend(pair.source[i]);
        if (!(evaluate(w, in) == in)) {
          moved = true;
          break;
        }
      }
    }
    if (!moved) throw error("internal check failed: no moved sequence found");
  }
  return v;
}

bool equal(const Word& w1, const Word& w2) {
  return decide_identity(w1 * w2.inverse()).is_identity;
}

Word random_word(std::mt19937_64& rng, std::size_t letters, std::size_t max_sub,
                 long max_exp) {
  std::uniform_int_distribution<int> kind(0, 1);
  std::uniform_int_distribution<std::size_t> sub_len(0, max_sub);
  std::uniform_int_distribution<long> expd(1, max_exp);
  std::uniform_int_distribution<int> bit(0, 1);
  std::vector<Letter> ls;
  for (std::size_t i = 0; i < letters; ++i) {
    std::vector<uint8_t> d(sub_len(rng));
    for (auto& b : d) b = static_cast<uint8_t>(bit(rng));
    Gen g{kind(rng) ? GenKind::X : GenKind::Y, Bits(std::move(d))};
    long e = expd(rng) * (bit(rng) ? 1 : -1);
    ls.push_back(Letter{std::move(g), e});
  }
  return Word(std::move(ls));
}

RelationReport verify_relations(std::size_t bound, std::size_t samples, uint64_t seed) {
  struct Item {
    std::string name;
    Word lhs, rhs;
  };
  std::vector<Item> items;
  for (int fam = 1; fam <= 5; ++fam) {
    auto inst = relation_instances(fam, bound);
    for (std::size_t i = 0; i < inst.size(); ++i)
      items.push_back({"family" + std::to_string(fam) + "#" + std::to_string(i),
                       inst[i].lhs, inst[i].rhs});
  }
  for (auto form : {NineForm::xy, NineForm::abc}) {
    auto nine = nine_relations(form);
    for (std::size_t i = 0; i < nine.size(); ++i)
      items.push_back({std::string(form == NineForm::xy ? "nine_xy#" : "nine_abc#") +
                           std::to_string(i),
                       nine[i].lhs, nine[i].rhs});
  }

  std::vector<std::string> failures(items.size());
  std::vector<int> ok(items.size(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long idx = 0; idx < static_cast<long>(items.size()); ++idx) {
    const Item& it = items[static_cast<std::size_t>(idx)];
    std::string why;
    bool good = true;
    try {
      if (!decide_identity(it.lhs * it.rhs.inverse()).is_identity) {
        good = false;
        why = "decision: not the identity";
      }
      std::mt19937_64 rng(seed + static_cast<uint64_t>(idx));
      for (std::size_t s = 0; good && s < samples; ++s) {
        Seq xi = random_seq(rng);
        if (!(evaluate(it.lhs, xi) == evaluate(it.rhs, xi))) {
          good = false;
          why = "evaluation differs at " + xi.str();
        }
      }
    } catch (const std::exception& ex) {
      good = false;
      why = ex.what();
    }
    ok[static_cast<std::size_t>(idx)] = good;
    if (!good) failures[static_cast<std::size_t>(idx)] = it.name + ": " + why;
  }

  RelationReport rep;
  rep.checked = items.size();
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (ok[i])
      ++rep.passed;
    else
      rep.failures.push_back(failures[i]);
  }
  std::ostringstream os;
  os << "relations checked: " << rep.checked << "\n";
  os << "passed: " << rep.passed << "\n";
  for (const auto& f : rep.failures) os << "FAIL " << f << "\n";
  rep.text = os.str();
  return rep;
}

}  // namespace ppg
