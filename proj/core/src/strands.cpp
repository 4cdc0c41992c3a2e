#include "bdecat/strands.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

#include "bdecat/config.hpp"
#include "bdecat/error.hpp"

namespace bdecat {

// ---- StrandsGenerator -------------------------------------------------------

StrandsGenerator StrandsGenerator::from_strands(const std::vector<std::pair<int, int>>& strands) {
  StrandsGenerator g;
  std::uint32_t targets = 0;
  for (auto [s, t] : strands) {
    if (s < 1 || t < 1 || s > kMaxPoints || t > kMaxPoints)
      throw Error(Errc::BadIndex, "strand endpoint out of range");
    if (t < s) throw Error(Errc::BadIndex, "strand " + std::to_string(s) + "->" +
                                               std::to_string(t) + " runs downward");
    if (g.image(s) != 0) throw Error(Errc::BadIndex, "repeated source " + std::to_string(s));
    if (targets & (1u << t)) throw Error(Errc::BadIndex, "repeated target " + std::to_string(t));
    targets |= 1u << t;
    g.code_ |= static_cast<std::uint64_t>(t) << (4 * (s - 1));
  }
  return g;
}

StrandsGenerator StrandsGenerator::identity_on(const std::vector<int>& points) {
  std::vector<std::pair<int, int>> s;
  for (int p : points) s.emplace_back(p, p);
  return from_strands(s);
}

std::vector<int> StrandsGenerator::sources() const {
  std::vector<int> out;
  for (int p = 1; p <= kMaxPoints; ++p)
    if (image(p)) out.push_back(p);
  return out;
}

std::vector<int> StrandsGenerator::targets() const {
  std::vector<int> out;
  for (int p = 1; p <= kMaxPoints; ++p)
    if (image(p)) out.push_back(image(p));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> StrandsGenerator::phi() const {
  std::vector<int> out;
  for (int p = 1; p <= kMaxPoints; ++p)
    if (image(p)) out.push_back(image(p));
  return out;
}

std::vector<std::pair<int, int>> StrandsGenerator::strands() const {
  std::vector<std::pair<int, int>> out;
  for (int p = 1; p <= kMaxPoints; ++p)
    if (image(p)) out.emplace_back(p, image(p));
  return out;
}

int StrandsGenerator::size() const {
  int c = 0;
  for (int p = 1; p <= kMaxPoints; ++p) c += image(p) != 0;
  return c;
}

int StrandsGenerator::inv() const {
  auto im = phi();
  int c = 0;
  for (size_t i = 0; i < im.size(); ++i)
    for (size_t j = i + 1; j < im.size(); ++j) c += im[j] < im[i];
  return c;
}

bool StrandsGenerator::is_idempotent() const {
  for (int p = 1; p <= kMaxPoints; ++p)
    if (image(p) && image(p) != p) return false;
  return true;
}

// ---- AlgebraElement ---------------------------------------------------------

namespace {

std::vector<StrandsGenerator> reduce_f2(std::vector<StrandsGenerator> v) {
  std::sort(v.begin(), v.end());
  std::vector<StrandsGenerator> out;
  for (size_t i = 0; i < v.size();) {
    size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(v[i]);
    i = j;
  }
  return out;
}

}  // namespace

AlgebraElement::AlgebraElement(int n, std::vector<StrandsGenerator> terms)
    : n_(n), terms_(reduce_f2(std::move(terms))) {}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  if (other.n_ != n_ && !other.is_zero() && !is_zero())
    throw Error(Errc::AmbientMismatch, "adding elements of A(" + std::to_string(n_) +
                                           ") and A(" + std::to_string(other.n_) + ")");
  if (is_zero()) n_ = other.n_;
  std::vector<StrandsGenerator> merged;
  std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(),
                                other.terms_.end(), std::back_inserter(merged));
  terms_ = std::move(merged);
  return *this;
}

// ---- multiplication and differential -------------------------------------

std::optional<StrandsGenerator> multiply(const StrandsGenerator& a, const StrandsGenerator& b) {
  if (a.targets() != b.sources()) return std::nullopt;
  std::vector<std::pair<int, int>> comp;
  for (auto [s, t] : a.strands()) comp.emplace_back(s, b.image(t));
  auto c = StrandsGenerator::from_strands(comp);
  if (a.inv() + b.inv() != c.inv()) return std::nullopt;
  return c;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.n() != b.n())
    throw Error(Errc::AmbientMismatch, "A(" + std::to_string(a.n()) + ") times A(" +
                                           std::to_string(b.n()) + ")");
  std::vector<StrandsGenerator> out;
  for (const auto& x : a.terms())
    for (const auto& y : b.terms())
      if (auto p = multiply(x, y)) out.push_back(*p);
  return AlgebraElement(a.n(), std::move(out));
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return multiply(a, b); }

AlgebraElement differential(int n, const StrandsGenerator& g) {
  auto st = g.strands();
  const int base = g.inv();
  std::vector<StrandsGenerator> out;
  for (size_t i = 0; i < st.size(); ++i)
    for (size_t j = i + 1; j < st.size(); ++j) {
      if (st[j].second > st[i].second) continue;
      auto sw = st;
      std::swap(sw[i].second, sw[j].second);
      auto h = StrandsGenerator::from_strands(sw);
      if (h.inv() == base - 1) out.push_back(h);
    }
  return AlgebraElement(n, std::move(out));
}

AlgebraElement differential(const AlgebraElement& a) {
  AlgebraElement out(a.n());
  for (const auto& g : a.terms()) out += differential(a.n(), g);
  return out;
}

// ---- chord elements and idempotents ----------------------------------------

AlgebraElement a0(int n, const std::vector<ReebChord>& rho, int count) {
  std::vector<bool> is_start(n + 1, false), is_end(n + 1, false);
  for (const auto& c : rho) {
    if (c.start < 1 || c.end > n || c.start >= c.end)
      throw Error(Errc::BadIndex, "chord [" + std::to_string(c.start) + "," +
                                      std::to_string(c.end) + "] invalid in A(" +
                                      std::to_string(n) + ")");
    if (is_start[c.start] || is_end[c.end])
      throw Error(Errc::EndpointClash, "two chords share an endpoint");
    is_start[c.start] = is_end[c.end] = true;
  }
  std::vector<int> free_points;
  for (int p = 1; p <= n; ++p)
    if (!is_start[p] && !is_end[p]) free_points.push_back(p);
  const int extra = count - static_cast<int>(rho.size());
  AlgebraElement out(n);
  if (extra < 0 || extra > static_cast<int>(free_points.size())) return out;
  std::vector<StrandsGenerator> terms;
  for (const auto& pick : k_subsets(static_cast<int>(free_points.size()), extra)) {
    std::vector<std::pair<int, int>> st;
    for (const auto& c : rho) st.emplace_back(c.start, c.end);
    for (int idx : pick) st.emplace_back(free_points[idx - 1], free_points[idx - 1]);
    terms.push_back(StrandsGenerator::from_strands(st));
  }
  return AlgebraElement(n, std::move(terms));
}

AlgebraElement idempotent(const Pmc& pmc, const Subset& s) {
  std::vector<StrandsGenerator> terms;
  std::function<void(size_t, std::vector<int>&)> rec = [&](size_t i, std::vector<int>& pts) {
    if (i == s.size()) {
      terms.push_back(StrandsGenerator::identity_on(pts));
      return;
    }
    for (int p : pmc.points_of(s[i])) {
      pts.push_back(p);
      rec(i + 1, pts);
      pts.pop_back();
    }
  };
  std::vector<int> pts;
  rec(0, pts);
  return AlgebraElement(pmc.num_points(), std::move(terms));
}

AlgebraElement unit(const Pmc& pmc, int i) {
  AlgebraElement out(pmc.num_points());
  for (const auto& s : k_subsets(pmc.num_pairs(), pmc.genus() + i)) out += idempotent(pmc, s);
  return out;
}

AlgebraElement a_of(const Pmc& pmc, const std::vector<ReebChord>& rho, int i) {
  const int n = pmc.num_points();
  AlgebraElement I = unit(pmc, i);
  return I * a0(n, rho, pmc.genus() + i) * I;
}

std::optional<Subset> pairs_of(const Pmc& pmc, const std::vector<int>& points) {
  Subset s;
  for (int p : points) s.push_back(pmc.pair_of(p));
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) return std::nullopt;
  return s;
}

std::optional<std::pair<Subset, Subset>> idempotents_of(const Pmc& pmc, const AlgebraElement& x) {
  if (x.is_zero()) return std::nullopt;
  std::optional<std::pair<Subset, Subset>> out;
  for (const auto& g : x.terms()) {
    auto l = pairs_of(pmc, g.sources());
    auto r = pairs_of(pmc, g.targets());
    if (!l || !r) return std::nullopt;
    if (!out) out.emplace(*l, *r);
    else if (out->first != *l || out->second != *r) return std::nullopt;
  }
  if (idempotent(pmc, out->first) * x * idempotent(pmc, out->second) != x) return std::nullopt;
  return out;
}

// ---- basis enumeration ------------------------------------------------------

namespace {

void check_size(const Pmc& pmc) {
  if (pmc.num_points() > max_points() || pmc.num_points() > StrandsGenerator::kMaxPoints)
    throw Error(Errc::SizeLimit, "4k = " + std::to_string(pmc.num_points()) +
                                     " exceeds the cap " + std::to_string(max_points()) +
                                     " (BDECAT_MAX_POINTS)");
}

// Chord sets with distinct starts and ends, starts in distinct pairs and
// ends in distinct pairs, of size at most `limit`.
std::vector<std::vector<ReebChord>> admissible_chord_sets(const Pmc& pmc, int limit) {
  const int n = pmc.num_points();
  std::vector<ReebChord> chords;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) chords.push_back({a, b});
  std::vector<std::vector<ReebChord>> out;
  std::vector<ReebChord> cur;
  std::vector<bool> start_pair(pmc.num_pairs() + 1, false), end_pair(pmc.num_pairs() + 1, false);
  std::function<void(size_t)> rec = [&](size_t from) {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) == limit) return;
    for (size_t c = from; c < chords.size(); ++c) {
      int sp = pmc.pair_of(chords[c].start), ep = pmc.pair_of(chords[c].end);
      if (start_pair[sp] || end_pair[ep]) continue;
      start_pair[sp] = end_pair[ep] = true;
      cur.push_back(chords[c]);
      rec(c + 1);
      cur.pop_back();
      start_pair[sp] = end_pair[ep] = false;
    }
  };
  rec(0);
  return out;
}

}  // namespace

std::vector<AlgebraElement> basis_of_AZ(const Pmc& pmc, int i) {
  check_size(pmc);
  const int k = pmc.genus();
  const int n = pmc.num_points();
  std::vector<AlgebraElement> out;
  if (i < -k || i > k) return out;
  for (const auto& rho : admissible_chord_sets(pmc, k + i)) {
    AlgebraElement a = a_of(pmc, rho, i);
    std::map<std::pair<Subset, Subset>, std::vector<StrandsGenerator>> groups;
    for (const auto& g : a.terms())
      groups[{*pairs_of(pmc, g.sources()), *pairs_of(pmc, g.targets())}].push_back(g);
    for (auto& [key, terms] : groups) out.emplace_back(n, std::move(terms));
  }
  return out;
}

// ---- notation ---------------------------------------------------------------

namespace {

std::string list_to_string(const std::vector<int>& v, char open, char close) {
  std::ostringstream os;
  os << open;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << close;
  return os.str();
}

std::vector<int> parse_list(const std::string& text, size_t& pos, char open, char close) {
  auto fail = [&] { throw Error(Errc::ParseError, "bad generator notation: " + text); };
  auto skip = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
  skip();
  if (pos >= text.size() || text[pos] != open) fail();
  ++pos;
  std::vector<int> out;
  skip();
  if (pos < text.size() && text[pos] == close) {
    ++pos;
    return out;
  }
  while (true) {
    skip();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail();
    out.push_back(std::stoi(text.substr(start, pos - start)));
    skip();
    if (pos >= text.size()) fail();
    if (text[pos] == close) {
      ++pos;
      return out;
    }
    if (text[pos] != ',') fail();
    ++pos;
  }
}

}  // namespace

std::string to_string(const StrandsGenerator& g) {
  return list_to_string(g.sources(), '{', '}') + "->" + list_to_string(g.targets(), '{', '}') +
         ":" + list_to_string(g.phi(), '[', ']');
}

std::string to_string(const AlgebraElement& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (size_t i = 0; i < a.terms().size(); ++i) out += (i ? " + " : "") + to_string(a.terms()[i]);
  return out;
}

StrandsGenerator parse_generator(const std::string& text) {
  size_t pos = 0;
  auto S = parse_list(text, pos, '{', '}');
  while (pos < text.size() && text[pos] == ' ') ++pos;
  if (text.compare(pos, 2, "->") != 0) throw Error(Errc::ParseError, "expected '->' in " + text);
  pos += 2;
  auto T = parse_list(text, pos, '{', '}');
  while (pos < text.size() && text[pos] == ' ') ++pos;
  if (pos >= text.size() || text[pos] != ':') throw Error(Errc::ParseError, "expected ':' in " + text);
  ++pos;
  auto phi = parse_list(text, pos, '[', ']');
  if (S.size() != phi.size()) throw Error(Errc::ParseError, "phi length differs from |S| in " + text);
  std::vector<std::pair<int, int>> st;
  for (size_t i = 0; i < S.size(); ++i) st.emplace_back(S[i], phi[i]);
  auto g = StrandsGenerator::from_strands(st);
  auto t_sorted = T;
  std::sort(t_sorted.begin(), t_sorted.end());
  if (g.targets() != t_sorted || g.sources() != S)
    throw Error(Errc::ParseError, "S, T and phi disagree in " + text);
  return g;
}

// ---- AlgebraBasis -------------------------------------------------------------

AlgebraBasis::AlgebraBasis(const Pmc& pmc, int i) : pmc_(pmc), summand_(i) {
  elements_ = basis_of_AZ(pmc, i);
  std::stable_sort(elements_.begin(), elements_.end(), [&](const auto& a, const auto& b) {
    auto ia = a.terms().front().is_idempotent(), ib = b.terms().front().is_idempotent();
    if (ia != ib) return ia;
    return false;
  });
  for (int b = 0; b < size(); ++b) {
    auto idem = idempotents_of(pmc_, elements_[b]);
    left_.push_back(idem->first);
    right_.push_back(idem->second);
    idempotent_.push_back(elements_[b].terms().front().is_idempotent());
    for (const auto& g : elements_[b].terms()) owner_[g.code()] = b;
  }
}

std::optional<int> AlgebraBasis::idempotent_index(const Subset& s) const {
  for (int b = 0; b < size(); ++b)
    if (idempotent_[b] && left_[b] == s) return b;
  return std::nullopt;
}

std::vector<ReebChord> AlgebraBasis::chords(int b) const {
  std::vector<ReebChord> out;
  for (auto [s, t] : elements_[b].terms().front().strands())
    if (s != t) out.push_back({s, t});
  return out;
}

std::vector<int> AlgebraBasis::decompose(const AlgebraElement& x) const {
  if (x.is_zero()) return {};
  if (x.n() != n()) throw Error(Errc::AmbientMismatch, "element lives in a different A(n)");
  std::map<int, size_t> hits;
  for (const auto& g : x.terms()) {
    auto it = owner_.find(g.code());
    if (it == owner_.end())
      throw Error(Errc::Mismatch, "term " + to_string(g) + " is not in A(Z," +
                                      std::to_string(summand_) + ")");
    ++hits[it->second];
  }
  std::vector<int> out;
  for (auto [b, c] : hits) {
    if (c != elements_[b].size())
      throw Error(Errc::Mismatch, "element is not a sum of basis elements of A(Z)");
    out.push_back(b);
  }
  return out;
}

AlgebraElement AlgebraBasis::compose(const std::vector<int>& coords) const {
  AlgebraElement out(n());
  for (int b : coords) out += elements_[b];
  return out;
}

std::vector<int> AlgebraBasis::product(int a, int b) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = products_.find({a, b});
    if (it != products_.end()) return it->second;
  }
  std::vector<int> v;
  if (right_[a] == left_[b]) v = decompose(elements_[a] * elements_[b]);
  std::lock_guard<std::mutex> lock(mu_);
  products_[{a, b}] = v;
  return v;
}

std::vector<int> AlgebraBasis::differential(int b) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = differentials_.find(b);
    if (it != differentials_.end()) return it->second;
  }
  auto v = decompose(bdecat::differential(elements_[b]));
  std::lock_guard<std::mutex> lock(mu_);
  differentials_[b] = v;
  return v;
}

std::string AlgebraBasis::label(int b) const {
  auto subset = [](const Subset& s) { return list_to_string(s, '(', ')'); };
  if (idempotent_[b]) return "I" + subset(left_[b]);
  std::string chords_text;
  for (const auto& c : chords(b))
    chords_text += (chords_text.empty() ? "" : ";") + std::to_string(c.start) + "," + std::to_string(c.end);
  return "I" + subset(left_[b]) + " a(" + chords_text + ") I" + subset(right_[b]);
}

std::shared_ptr<const AlgebraBasis> middle_basis(const Pmc& pmc) {
  static std::mutex mu;
  static std::map<std::vector<int>, std::shared_ptr<const AlgebraBasis>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[pmc.matching()];
  if (!slot) slot = std::make_shared<const AlgebraBasis>(pmc, 0);
  return slot;
}

}  // namespace bdecat
