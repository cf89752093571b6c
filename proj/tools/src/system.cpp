#include "beltca_cli/system.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "beltca/error.hpp"
#include "beltca/khat.hpp"
#include "beltca/serialize.hpp"

namespace beltca::cli {

using nlohmann::json;

std::optional<PeriodicConfig> System::configuration(std::string_view name) const {
  for (const auto& [n, x] : configurations)
    if (n == name) return x;
  return std::nullopt;
}

namespace {

void only_keys(const json& j, std::initializer_list<const char*> keys, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) throw ParseError(where + ": unknown key '" + k + "'");
}

template <class T>
T get(const json& j, const char* key, const std::string& where) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(where + "." + key + ": " + e.what());
  }
}

template <class T>
T get_or(const json& j, const char* key, T fallback, const std::string& where) {
  return j.contains(key) ? get<T>(j, key, where) : fallback;
}

std::string trim(std::string_view s) {
  const auto a = s.find_first_not_of(" \t\n");
  if (a == std::string_view::npos) return {};
  const auto b = s.find_last_not_of(" \t\n");
  return std::string(s.substr(a, b - a + 1));
}

// "head k1=v1 k2=v2" -> head, {k: v}
std::pair<std::string, std::map<std::string, std::string>> split_spec(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string head, tok;
  in >> head;
  std::map<std::string, std::string> kv;
  while (in >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) {
      kv[tok] = "";
      continue;
    }
    kv[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return {head, kv};
}

long to_long(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad integer for " + what + ": '" + s + "'");
  }
}

std::vector<std::uint32_t> to_list(const std::string& s, const std::string& what) {
  std::vector<std::uint32_t> out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, ',')) {
    const long v = to_long(part, what);
    if (v < 0) throw ParseError(what + " must be nonnegative");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  if (out.empty()) throw ParseError("empty list for " + what);
  return out;
}

void require_keys(const std::map<std::string, std::string>& kv, std::initializer_list<const char*> keys,
                  const std::string& head) {
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [k, v] : kv)
    if (!allowed.count(k)) throw ParseError("action '" + head + "': unknown parameter '" + k + "'");
}

// Letters of w whose generator lies in [first, first+count), re-indexed from 0.
GroupWord restrict_word(const GroupWord& w, std::size_t first, std::size_t count) {
  std::vector<Letter> out;
  for (const auto& l : w.letters())
    if (l.generator >= first && l.generator < first + count) out.push_back({l.generator - first, l.exponent});
  return GroupWord(std::move(out));
}

}  // namespace

std::pair<PointyAction, std::function<std::string(const GroupWord&)>> parse_gallery_action(std::string_view text) {
  const std::string t = trim(text);
  if (t.rfind("product(", 0) == 0) {
    if (t.back() != ')') throw ParseError("product(...) is missing ')'");
    const std::string body = t.substr(8, t.size() - 9);
    // Split on the top-level ';'.
    int depth = 0;
    std::size_t cut = std::string::npos;
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (body[i] == '(') ++depth;
      if (body[i] == ')') --depth;
      if (body[i] == ';' && depth == 0) {
        cut = i;
        break;
      }
    }
    if (cut == std::string::npos) throw ParseError("product(A; B) needs two factors");
    auto [p, nfp] = parse_gallery_action(body.substr(0, cut));
    auto [q, nfq] = parse_gallery_action(body.substr(cut + 1));
    const std::size_t np = p.generators.size(), nq = q.generators.size();
    auto nf = [nfp, nfq, np, nq](const GroupWord& w) {
      return "(" + nfp(restrict_word(w, 0, np)) + ") x (" + nfq(restrict_word(w, np, nq)) + ")";
    };
    return {product_action(p, q), nf};
  }
  auto [head, kv] = split_spec(t);
  if (head == "lamplighter") {
    require_keys(kv, {"m"}, head);
    const auto moduli = kv.count("m") ? to_list(kv.at("m"), "m") : std::vector<std::uint32_t>{2};
    auto nf = [moduli](const GroupWord& w) { return lamplighter_normal_form(moduli, w); };
    try {
      return {lamplighter_action(moduli), nf};
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  if (head == "shift") {
    require_keys(kv, {"n"}, head);
    const long n = kv.count("n") ? to_long(kv.at("n"), "n") : 2;
    if (n < 2) throw ParseError("shift: n must be at least 2");
    auto nf = [](const GroupWord& w) {
      long e = 0;
      for (const auto& l : w.letters()) e += l.exponent;
      return "S^" + std::to_string(e);
    };
    return {shift_action(Alphabet::plain(static_cast<std::uint32_t>(n))), nf};
  }
  throw ParseError("unknown gallery action '" + head + "'");
}

namespace {

Automorphism parse_automorphism(const json& j, const AlphabetRef& alpha, std::size_t idx) {
  const std::string where = "automorphisms[" + std::to_string(idx) + "]";
  only_keys(j, {"name", "shift", "cellwise", "window", "rule", "inverse_window", "inverse_rule"}, where);
  const auto name = get<std::string>(j, "name", where);
  try {
    if (j.contains("shift")) return Automorphism::shift(alpha, get<int>(j, "shift", where)).renamed(name);
    if (j.contains("cellwise")) {
      const auto labels = get<std::vector<std::string>>(j, "cellwise", where);
      if (labels.size() != alpha->size()) throw ParseError(where + ".cellwise: need one image per symbol");
      std::vector<Symbol> fwd(alpha->size()), bwd(alpha->size(), alpha->size());
      for (Symbol s = 0; s < alpha->size(); ++s) {
        auto v = alpha->find(labels[s]);
        if (!v) throw ParseError(where + ".cellwise: unknown symbol '" + labels[s] + "'");
        if (bwd[*v] != alpha->size()) throw ParseError(where + ".cellwise: not a permutation");
        fwd[s] = *v;
        bwd[*v] = s;
      }
      return Automorphism(name, SlidingBlockCode::cellwise(alpha, fwd), SlidingBlockCode::cellwise(alpha, bwd),
                          fwd[alpha->zero()] == alpha->zero());
    }
    if (j.contains("rule")) {
      auto window = [&](const char* key) {
        const auto w = get<std::vector<int>>(j, key, where);
        if (w.size() != 2) throw ParseError(where + "." + key + ": expected [left, right]");
        return Window{w[0], w[1]};
      };
      auto table = [&](const char* key) {
        std::vector<Symbol> out;
        for (const auto& l : get<std::vector<std::string>>(j, key, where)) {
          auto v = alpha->find(l);
          if (!v) throw ParseError(where + "." + key + ": unknown symbol '" + l + "'");
          out.push_back(*v);
        }
        return out;
      };
      auto fwd = SlidingBlockCode::from_table(alpha, window("window"), table("rule"));
      auto bwd = SlidingBlockCode::from_table(alpha, window("inverse_window"), table("inverse_rule"));
      return Automorphism(name, fwd, bwd, fwd.maps_zero_to_zero());
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": needs one of shift, cellwise, rule");
}

Word parse_word_cells(const std::vector<std::string>& cells, const AlphabetRef& alpha, const std::string& where) {
  Word w;
  for (const auto& c : cells) {
    auto v = alpha->find(c);
    if (!v) throw ParseError(where + ": unknown symbol '" + c + "'");
    w.push_back(*v);
  }
  return w;
}

AfoEntry parse_afo(const json& j, const AlphabetRef& alpha, std::size_t idx) {
  const std::string where = "afos[" + std::to_string(idx) + "]";
  only_keys(j, {"name", "words", "pi", "offsets", "threshold", "expect"}, where);
  std::vector<Word> words;
  for (const auto& w : get<std::vector<std::vector<std::string>>>(j, "words", where))
    words.push_back(parse_word_cells(w, alpha, where + ".words"));
  try {
    const std::size_t k = words.size();
    const auto pi = parse_cycle_notation(get_or<std::string>(j, "pi", "()", where), k);
    const auto offsets = get_or<std::vector<long>>(j, "offsets", std::vector<long>(k, 0), where);
    const std::size_t n0 = j.contains("threshold") ? get<std::size_t>(j, "threshold", where)
                                                   : minimal_safe_threshold(*alpha, words);
    AfoEntry e{AfoSpec(SafeWordSet(alpha, words, n0), pi, offsets, get_or<std::string>(j, "name", "afo", where)), {}};
    if (j.contains("expect")) {
      for (const auto& m : j.at("expect")) {
        only_keys(m, {"in", "out"}, where + ".expect");
        e.expect.emplace_back(parse_periodic(get<std::string>(m, "in", where), alpha),
                              parse_periodic(get<std::string>(m, "out", where), alpha));
      }
    }
    return e;
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + ": " + e.what());
  }
}

void add_embedded(System& s, const EmbeddedAutomorphism& e, const std::string& name, bool involution) {
  s.embedded.push_back(e);
  auto g = e.as_generator(name);
  g.involution = involution;
  s.table.add(std::move(g));
}

}  // namespace

System parse_system(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text, nullptr, true, true);
  } catch (const json::exception& e) {
    throw ParseError(std::string("config is not valid JSON: ") + e.what());
  }
  only_keys(doc,
            {"action", "alphabet", "automorphisms", "afos", "belt", "wreath", "presentation", "verify",
             "configurations", "description"},
            "config");
  System s;

  if (doc.contains("verify")) {
    const auto& v = doc.at("verify");
    only_keys(v, {"period", "ball", "n_min", "n_max", "witness_period", "samples", "sample_period", "seed", "max_tapes"},
              "verify");
    auto& p = s.verify;
    p.period = get_or(v, "period", p.period, "verify");
    p.ball = get_or(v, "ball", p.ball, "verify");
    p.n_min = get_or(v, "n_min", p.n_min, "verify");
    p.n_max = get_or(v, "n_max", p.n_max, "verify");
    p.witness_period = get_or(v, "witness_period", p.witness_period, "verify");
    p.samples = get_or(v, "samples", p.samples, "verify");
    p.sample_period = get_or(v, "sample_period", p.sample_period, "verify");
    p.seed = get_or(v, "seed", p.seed, "verify");
    p.max_tapes = get_or(v, "max_tapes", p.max_tapes, "verify");
  }

  bool embed = false, doubling = false;
  if (doc.contains("belt")) {
    const auto& b = doc.at("belt");
    only_keys(b, {"embed", "doubling", "radius"}, "belt");
    embed = get_or(b, "embed", true, "belt");
    doubling = get_or(b, "doubling", false, "belt");
    s.windowed_radius = get_or(b, "radius", 0, "belt");
    if (s.windowed_radius < 0) throw ParseError("belt.radius must be nonnegative");
  }

  const bool has_action = doc.contains("action");
  const bool has_alphabet = doc.contains("alphabet");
  if (has_action == has_alphabet) throw ParseError("config needs exactly one of 'action' and 'alphabet'");
  if (!has_action && doc.contains("wreath")) throw ParseError("'wreath' needs a gallery 'action'");

  if (has_action) {
    s.action = trim(get<std::string>(doc, "action", "config"));
    if (doc.contains("automorphisms") || doc.contains("afos"))
      throw ParseError("'automorphisms' and 'afos' belong to an 'alphabet' config");
    auto [head, kv] = split_spec(s.action);
    if (head == "zz2z") {
      require_keys(kv, {}, head);
      auto ex = assemble_example_zz2z();
      s.zz2z = true;
      s.table = ex.table;
      const auto& f = ex.spec.factors().front();
      s.embedded = {f.top[0], f.top[0].inverse(), f.top[1], f.base.embedded, f.base.embedded.inverse()};
      s.afos.push_back({f.base.afo, {}});
      s.pointy = ex.spec.top();
      s.normal_form = [](const GroupWord& w) { return lamplighter_normal_form({2}, w); };
      for (const auto& g : ex.spec.top().generators)
        s.automorphisms.push_back(lift_to_tracks(g, f.sigma, 0, atomic_tracks(*ex.spec.top().alphabet)));
      s.wreath = std::move(ex.spec);
    } else if (head == "khat") {
      require_keys(kv, {"k"}, head);
      const long k = kv.count("k") ? to_long(kv.at("k"), "k") : 2;
      if (k < 1 || k > 4) throw ParseError("khat: k must be in 1..4");
      s.khat_k = static_cast<std::size_t>(k);
      s.table = khat_table(s.khat_k);
      for (std::size_t i = 1; i <= s.khat_k; ++i) s.runwise.push_back(khat_generator(s.khat_k, i));
    } else if (head == "neumann") {
      if (kv.count("even")) {
        require_keys(kv, {"even"}, head);
        s.neumann = neumann_even_generators();
      } else if (kv.count("prog")) {
        require_keys(kv, {"prog", "l", "k"}, head);
        const long l = kv.count("l") ? to_long(kv.at("l"), "l") : 3, k = kv.count("k") ? to_long(kv.at("k"), "k") : 1;
        if (l < 3 || k < 1 || k > 16) throw ParseError("neumann prog: need l >= 3 and 1 <= k <= 16");
        s.neumann = neumann_progression_generators(static_cast<std::uint32_t>(l), static_cast<std::uint32_t>(k));
      } else {
        throw ParseError("neumann: expected 'neumann even' or 'neumann prog l=<l> k=<k>'");
      }
      s.table = s.neumann->table();
      s.runwise = {s.neumann->a, s.neumann->b};
    } else {
      auto [p, nf] = parse_gallery_action(s.action);
      s.pointy = p;
      s.normal_form = nf;
      s.automorphisms = p.generators;
      if (doc.contains("wreath")) {
        const auto& w = doc.at("wreath");
        only_keys(w, {"free", "moduli", "doubling"}, "wreath");
        BaseSignature sig{get_or<std::size_t>(w, "free", 0, "wreath"),
                          get_or<std::vector<std::uint32_t>>(w, "moduli", {}, "wreath")};
        try {
          s.wreath.emplace(p, sig, get_or(w, "doubling", false, "wreath"));
        } catch (const std::invalid_argument& e) {
          throw ParseError(std::string("wreath: ") + e.what());
        }
        s.table = s.wreath->table();
        for (const auto& f : s.wreath->factors()) {
          s.afos.push_back({f.base.afo, {}});
          if (s.wreath->factors().size() == 1) {
            s.embedded = f.top;
            s.embedded.push_back(f.base.embedded);
          }
        }
      } else if (embed) {
        s.table = GeneratorTable(BeltAlphabet(p.alphabet).gamma());
        for (std::size_t i = 0; i < p.generators.size(); ++i)
          add_embedded(s, embed_automorphism(p.generators[i], doubling), p.generators[i].name(), p.involutions[i]);
      } else {
        s.table = p.table();
      }
    }
  } else {
    s.action = "custom";
    AlphabetRef alpha = parse_alphabet(get<std::string>(doc, "alphabet", "config"));
    if (doc.contains("automorphisms"))
      for (std::size_t i = 0; i < doc.at("automorphisms").size(); ++i)
        s.automorphisms.push_back(parse_automorphism(doc.at("automorphisms")[i], alpha, i));
    if (doc.contains("afos"))
      for (std::size_t i = 0; i < doc.at("afos").size(); ++i) s.afos.push_back(parse_afo(doc.at("afos")[i], alpha, i));
    if (s.automorphisms.empty() && s.afos.empty()) throw ParseError("config declares no generators");
    try {
      if (embed) {
        s.table = GeneratorTable(BeltAlphabet(alpha).gamma());
        for (const auto& a : s.automorphisms) add_embedded(s, embed_automorphism(a, doubling), a.name(), false);
        for (const auto& e : s.afos) add_embedded(s, embed_afo(e.afo, doubling), e.afo.name(), false);
      } else {
        s.table = GeneratorTable(alpha);
        for (const auto& a : s.automorphisms) s.table.add(a);
        for (const auto& e : s.afos) s.table.add(as_generator(e.afo));
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }

  if (s.windowed_radius > 0) {
    for (auto& e : s.embedded)
      e = EmbeddedAutomorphism(e.name(), e.forward().with_radius(s.windowed_radius),
                               e.backward().with_radius(s.windowed_radius), e.doubling());
    for (auto& r : s.runwise)
      r = RunwiseAutomorphism(r.name(), r.forward().with_radius(s.windowed_radius),
                              r.backward().with_radius(s.windowed_radius));
  }

  if (doc.contains("presentation")) {
    const auto& p = doc.at("presentation");
    only_keys(p, {"relations", "non_relations"}, "presentation");
    Presentation pres;
    for (const auto& w : get_or<std::vector<std::string>>(p, "relations", {}, "presentation"))
      pres.relations.push_back(GroupWord::parse(w, s.table));
    for (const auto& w : get_or<std::vector<std::string>>(p, "non_relations", {}, "presentation"))
      pres.non_relations.push_back(GroupWord::parse(w, s.table));
    s.presentation = std::move(pres);
  } else if (s.zz2z) {
    s.presentation = zz2z_presentation(s.table);
  }

  if (doc.contains("configurations")) {
    const auto& c = doc.at("configurations");
    if (!c.is_object()) throw ParseError("configurations: expected an object of name -> tape");
    for (const auto& [name, v] : c.items()) {
      if (!v.is_string()) throw ParseError("configurations." + name + ": expected a tape string");
      s.configurations.emplace_back(name, parse_periodic(v.get<std::string>(), s.table.alphabet()));
    }
  }
  return s;
}

System load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_system(buf.str());
}

}  // namespace beltca::cli
