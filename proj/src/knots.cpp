#include "mq/knots.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "mq/alexander.hpp"
#include "mq/diagram.hpp"

namespace mq {

// ---------------------------------------------------------------------------
// DiagramBuilder

int DiagramBuilder::new_joint() {
  node_kind_.push_back(false);
  links_.push_back({});
  return int(node_kind_.size()) - 1;
}

int DiagramBuilder::new_crossing(bool under_02) {
  node_kind_.push_back(true);
  links_.push_back({});
  crossing_index_.push_back(int(node_kind_.size()) - 1);
  under_02_.push_back(under_02);
  return int(node_kind_.size()) - 1;
}

void DiagramBuilder::connect(End a, End b) {
  auto check = [&](End e) {
    if (e.node < 0 || e.node >= int(node_kind_.size()))
      throw internal_error("diagram: bad node");
    int maxp = node_kind_[std::size_t(e.node)] ? 4 : 2;
    if (e.port < 0 || e.port >= maxp) throw internal_error("diagram: bad port");
    if (links_[std::size_t(e.node)][std::size_t(e.port)].node != -1)
      throw internal_error("diagram: port already connected");
  };
  check(a);
  check(b);
  links_[std::size_t(a.node)][std::size_t(a.port)] = b;
  links_[std::size_t(b.node)][std::size_t(b.port)] = a;
}

DiagramBuilder::End DiagramBuilder::linked(End e) const {
  return links_[std::size_t(e.node)][std::size_t(e.port)];
}

int DiagramBuilder::trace_to_free_end(End start) const {
  End cur = linked(start);
  for (std::size_t guard = 0; guard < 4 * links_.size() + 8; ++guard) {
    if (cur.node == -1) throw internal_error("diagram: dangling strand");
    if (is_crossing(cur.node)) {
      cur = linked(End{cur.node, (cur.port + 2) % 4});
      continue;
    }
    int other = 1 - cur.port;
    if (linked(End{cur.node, other}).node == -1) return cur.node;
    cur = linked(End{cur.node, other});
  }
  throw internal_error("diagram: strand trace did not terminate");
}

PDCode DiagramBuilder::trace_knot() const {
  const std::size_t n = crossing_index_.size();
  if (n == 0) throw internal_error("trace_knot on crossing-free diagram");

  // labels[node][port] and whether the strand enters there
  std::map<std::pair<int, int>, std::pair<int, bool>> role;  // -> (edge, is_in)

  End start{crossing_index_[0], 2};
  End exit = start;
  int edge = 0;
  do {
    ++edge;
    if (edge > int(2 * n)) throw internal_error("diagram trace failed to close up");
    role[{exit.node, exit.port}] = {edge, false};
    End nxt = linked(exit);
    for (;;) {
      if (nxt.node == -1) throw parse_error("diagram has an unconnected strand");
      if (is_crossing(nxt.node)) break;
      nxt = linked(End{nxt.node, 1 - nxt.port});
    }
    role[{nxt.node, nxt.port}] = {edge, true};
    exit = End{nxt.node, (nxt.port + 2) % 4};
  } while (exit.node != start.node || exit.port != start.port);
  if (edge != int(2 * n) || role.size() != 4 * n)
    throw parse_error("diagram is not a knot (multiple components)");

  PDCode pd;
  for (std::size_t k = 0; k < n; ++k) {
    int node = crossing_index_[k];
    int p0 = under_02_[k] ? 0 : 1;
    int p2 = p0 + 2;
    int s = role.at({node, p0}).second ? p0 : p2;
    std::array<int, 4> tuple{};
    for (int i = 0; i < 4; ++i) tuple[std::size_t(i)] = role.at({node, (s + i) % 4}).first;
    pd.crossings.push_back(tuple);
  }
  return pd;
}

// ---------------------------------------------------------------------------
// PD codes

PDCode PDCode::parse(const std::string& text) {
  PDCode pd;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
  };
  auto skip_sep = [&] {
    while (i < text.size() &&
           (std::isspace((unsigned char)text[i]) || text[i] == ','))
      ++i;
  };
  skip_sep();
  while (i < text.size()) {
    if (text[i] != 'X') throw parse_error("PD parse error at position " + std::to_string(i));
    ++i;
    if (i >= text.size() || text[i] != '[')
      throw parse_error("PD parse error: expected '[' at position " + std::to_string(i));
    ++i;
    std::array<int, 4> tuple{};
    for (int k = 0; k < 4; ++k) {
      skip_ws();
      std::string digits;
      while (i < text.size() && std::isdigit((unsigned char)text[i])) digits += text[i++];
      if (digits.empty())
        throw parse_error("PD parse error: expected edge label at position " +
                          std::to_string(i));
      tuple[std::size_t(k)] = std::stoi(digits);
      skip_ws();
      if (k < 3) {
        if (i >= text.size() || text[i] != ',')
          throw parse_error("PD parse error: expected ',' at position " + std::to_string(i));
        ++i;
      }
    }
    if (i >= text.size() || text[i] != ']')
      throw parse_error("PD parse error: expected ']' at position " + std::to_string(i));
    ++i;
    pd.crossings.push_back(tuple);
    skip_sep();
  }
  return pd;
}

std::string PDCode::str() const {
  std::ostringstream out;
  for (std::size_t k = 0; k < crossings.size(); ++k) {
    if (k) out << " ";
    out << "X[" << crossings[k][0] << "," << crossings[k][1] << "," << crossings[k][2]
        << "," << crossings[k][3] << "]";
  }
  return out.str();
}

namespace {

int next_edge(int e, int total) { return e % total + 1; }

}  // namespace

int pd_crossing_sign(const PDCode& pd, std::size_t k) {
  const auto& x = pd.crossings.at(k);
  int total = pd.edge_count();
  if (x[3] == next_edge(x[1], total)) return -1;  // overstrand b -> d
  if (x[1] == next_edge(x[3], total)) return +1;  // overstrand d -> b
  throw parse_error("PD crossing has non-consecutive overstrand labels");
}

void validate_knot_pd(const PDCode& pd) {
  const std::size_t n = pd.crossing_count();
  if (n == 0) return;
  const int total = int(2 * n);
  std::vector<int> count(std::size_t(total) + 1, 0);
  for (const auto& x : pd.crossings)
    for (int e : x) {
      if (e < 1 || e > total)
        throw parse_error("PD edge label " + std::to_string(e) + " out of range 1.." +
                          std::to_string(total));
      ++count[std::size_t(e)];
    }
  for (int e = 1; e <= total; ++e)
    if (count[std::size_t(e)] != 2)
      throw parse_error("PD edge label " + std::to_string(e) + " occurs " +
                        std::to_string(count[std::size_t(e)]) + " times (expected 2)");

  std::vector<int> in_count(std::size_t(total) + 1, 0), out_count(std::size_t(total) + 1, 0);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& x = pd.crossings[k];
    if (x[2] != next_edge(x[0], total))
      throw parse_error("PD crossing " + std::to_string(k + 1) +
                        ": understrand labels not consecutive");
    int sign = pd_crossing_sign(pd, k);
    int over_in = sign < 0 ? x[1] : x[3];
    int over_out = sign < 0 ? x[3] : x[1];
    ++in_count[std::size_t(x[0])];
    ++in_count[std::size_t(over_in)];
    ++out_count[std::size_t(x[2])];
    ++out_count[std::size_t(over_out)];
  }
  for (int e = 1; e <= total; ++e)
    if (in_count[std::size_t(e)] != 1 || out_count[std::size_t(e)] != 1)
      throw parse_error("multi-component input when a knot is required");
}

// ---------------------------------------------------------------------------
// Wirtinger from PD

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(std::size_t(n)) {
    for (int i = 0; i < n; ++i) parent[std::size_t(i)] = i;
  }
  int find(int a) {
    while (parent[std::size_t(a)] != a) {
      parent[std::size_t(a)] = parent[std::size_t(parent[std::size_t(a)])];
      a = parent[std::size_t(a)];
    }
    return a;
  }
  void unite(int a, int b) { parent[std::size_t(find(a))] = find(b); }
};

Word wirtinger_relator(const std::string& out_arc, const std::string& in_arc,
                       const std::string& over_arc, int sign) {
  std::vector<Letter> ls;
  ls.push_back(Letter{out_arc, 1});
  ls.push_back(Letter{over_arc, -sign});
  ls.push_back(Letter{in_arc, -1});
  ls.push_back(Letter{over_arc, sign});
  return Word(std::move(ls));
}

}  // namespace

WirtingerPresentation wirtinger_from_pd(const PDCode& pd) {
  validate_knot_pd(pd);
  const std::size_t n = pd.crossing_count();
  if (n == 0)
    return WirtingerPresentation{Presentation({"x1"}, {}), {}};

  const int total = int(2 * n);
  UnionFind uf(total + 1);
  for (const auto& x : pd.crossings) uf.unite(x[1], x[3]);

  // arcs named x1.. in order of their smallest member edge
  std::map<int, std::string> arc_name;
  std::vector<std::string> gens;
  for (int e = 1; e <= total; ++e) {
    int root = uf.find(e);
    if (!arc_name.count(root)) {
      std::string name = "x" + std::to_string(gens.size() + 1);
      arc_name[root] = name;
      gens.push_back(name);
    }
  }
  auto arc = [&](int e) { return arc_name.at(uf.find(e)); };

  std::vector<Word> relators;
  std::vector<WirtingerCrossing> meta;
  for (std::size_t k = 0; k < n; ++k) {
    const auto& x = pd.crossings[k];
    int sign = pd_crossing_sign(pd, k);
    WirtingerCrossing wc{k, arc(x[2]), arc(x[0]), arc(x[1]), sign};
    relators.push_back(wirtinger_relator(wc.out_arc, wc.in_arc, wc.over_arc, sign));
    meta.push_back(std::move(wc));
  }
  return WirtingerPresentation{Presentation(std::move(gens), std::move(relators)),
                               std::move(meta)};
}

// ---------------------------------------------------------------------------
// Gauss codes

std::size_t GaussCode::crossing_count() const {
  std::set<int> ids;
  for (const auto& e : entries) ids.insert(e.id);
  return ids.size();
}

GaussCode GaussCode::parse(const std::string& text) {
  GaussCode gc;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace((unsigned char)text[i])) {
      ++i;
      continue;
    }
    char kind = text[i];
    if (kind != 'O' && kind != 'U')
      throw parse_error("Gauss parse error at position " + std::to_string(i) +
                        ": expected O or U");
    ++i;
    std::string digits;
    while (i < text.size() && std::isdigit((unsigned char)text[i])) digits += text[i++];
    if (digits.empty())
      throw parse_error("Gauss parse error: missing crossing id at position " +
                        std::to_string(i));
    if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
      throw parse_error("Gauss parse error: missing sign at position " + std::to_string(i));
    int sign = text[i] == '+' ? 1 : -1;
    ++i;
    gc.entries.push_back(GaussEntry{std::stoi(digits), kind == 'O', sign});
  }
  validate_gauss(gc);
  return gc;
}

std::string GaussCode::str() const {
  std::ostringstream out;
  for (const auto& e : entries)
    out << (e.over ? 'O' : 'U') << e.id << (e.sign > 0 ? '+' : '-');
  return out.str();
}

void validate_gauss(const GaussCode& gc) {
  std::map<int, int> overs, unders;
  std::map<int, int> signs;
  for (const auto& e : gc.entries) {
    (e.over ? overs : unders)[e.id]++;
    auto it = signs.find(e.id);
    if (it == signs.end())
      signs[e.id] = e.sign;
    else if (it->second != e.sign)
      throw parse_error("Gauss code: crossing " + std::to_string(e.id) +
                        " has inconsistent signs");
  }
  const std::size_t n = signs.size();
  for (const auto& [id, _] : signs) {
    if (id < 1 || id > int(n))
      throw parse_error("Gauss code: ids are not contiguous 1.." + std::to_string(n));
    if (overs[id] != 1 || unders[id] != 1)
      throw parse_error("Gauss code: crossing " + std::to_string(id) +
                        " must appear exactly once as O and once as U");
  }
}

WirtingerPresentation wirtinger_from_gauss(const GaussCode& gc) {
  validate_gauss(gc);
  if (gc.entries.empty())
    return WirtingerPresentation{Presentation({"x1"}, {}), {}};

  const std::size_t len = gc.entries.size();
  std::vector<std::size_t> upos;  // positions of under-passes, ascending
  for (std::size_t i = 0; i < len; ++i)
    if (!gc.entries[i].over) upos.push_back(i);
  const std::size_t c = upos.size();

  // arc index for every position: arc i covers (upos[i], upos[i+1]] cyclically
  auto arc_of_pos = [&](std::size_t pos) {
    for (std::size_t i = 0; i < c; ++i) {
      std::size_t from = upos[i], to = upos[(i + 1) % c];
      if (from < to) {
        if (pos > from && pos <= to) return i;
      } else {  // wraps
        if (pos > from || pos <= to) return i;
      }
    }
    throw internal_error("gauss arc lookup failed");
  };

  std::vector<std::string> gens;
  for (std::size_t i = 0; i < c; ++i) gens.push_back("x" + std::to_string(i + 1));

  std::vector<Word> relators;
  std::vector<WirtingerCrossing> meta;
  std::map<int, std::size_t> over_pos;
  for (std::size_t i = 0; i < len; ++i)
    if (gc.entries[i].over) over_pos[gc.entries[i].id] = i;

  std::size_t rel_index = 0;
  for (std::size_t i = 0; i < c; ++i) {
    const auto& under = gc.entries[upos[i]];
    std::size_t in_arc = (i + c - 1) % c;  // arc ending at this under-pass
    std::size_t out_arc = i;               // arc starting after it
    std::size_t over_arc = arc_of_pos(over_pos.at(under.id));
    WirtingerCrossing wc{rel_index++, gens[out_arc], gens[in_arc], gens[over_arc],
                         under.sign};
    relators.push_back(wirtinger_relator(wc.out_arc, wc.in_arc, wc.over_arc, wc.sign));
    meta.push_back(std::move(wc));
  }
  return WirtingerPresentation{Presentation(std::move(gens), std::move(relators)),
                               std::move(meta)};
}

GaussCode gauss_from_pd(const PDCode& pd) {
  validate_knot_pd(pd);
  GaussCode gc;
  const std::size_t n = pd.crossing_count();
  if (n == 0) return gc;
  const int total = int(2 * n);
  // edge e arrives at exactly one crossing; labels are sequential along the
  // orientation, so walking e = 1..2n reads the Gauss code off directly
  std::map<int, GaussEntry> arrival;
  for (std::size_t k = 0; k < n; ++k) {
    const auto& x = pd.crossings[k];
    int sign = pd_crossing_sign(pd, k);
    int over_in = sign < 0 ? x[1] : x[3];
    arrival[x[0]] = GaussEntry{int(k) + 1, false, sign};
    arrival[over_in] = GaussEntry{int(k) + 1, true, sign};
  }
  for (int e = 1; e <= total; ++e) gc.entries.push_back(arrival.at(e));
  validate_gauss(gc);
  return gc;
}

// ---------------------------------------------------------------------------
// moves

PDCode crossing_change(const PDCode& pd, std::size_t index) {
  if (index >= pd.crossing_count()) throw parse_error("crossing index out of range");
  PDCode out = pd;
  const auto& x = pd.crossings[index];
  int sign = pd_crossing_sign(pd, index);
  // rotate so the new understrand's incoming edge leads
  if (sign > 0)
    out.crossings[index] = {x[3], x[0], x[1], x[2]};
  else
    out.crossings[index] = {x[1], x[2], x[3], x[0]};
  return out;
}

GaussCode crossing_change(const GaussCode& gc, int id) {
  bool found = false;
  GaussCode out = gc;
  for (auto& e : out.entries)
    if (e.id == id) {
      e.over = !e.over;
      e.sign = -e.sign;
      found = true;
    }
  if (!found) throw parse_error("crossing id " + std::to_string(id) + " not present");
  return out;
}

namespace {

GaussCode compact_ids(GaussCode gc) {
  std::set<int> ids;
  for (const auto& e : gc.entries) ids.insert(e.id);
  std::map<int, int> remap;
  int next = 1;
  for (int id : ids) remap[id] = next++;
  for (auto& e : gc.entries) e.id = remap[e.id];
  return gc;
}

}  // namespace

GaussCode virtualize(const GaussCode& gc, int id) {
  bool found = false;
  GaussCode out;
  for (const auto& e : gc.entries) {
    if (e.id == id) {
      found = true;
      continue;
    }
    out.entries.push_back(e);
  }
  if (!found) throw parse_error("crossing id " + std::to_string(id) + " not present");
  return compact_ids(std::move(out));
}

// ---------------------------------------------------------------------------
// relator deltas

namespace {

RelatorDelta one_relator_delta(const WirtingerPresentation& wp, std::size_t crossing,
                               const Word& new_relator) {
  if (crossing >= wp.crossings.size()) throw parse_error("crossing index out of range");
  const auto& wc = wp.crossings[crossing];
  const Presentation& p = wp.presentation;

  auto rel = p.relators();
  RelatorDelta out;
  out.relator_index = wc.relator_index;
  out.old_relator = rel[wc.relator_index];
  out.new_relator = new_relator;
  rel[wc.relator_index] = new_relator;
  out.result = Presentation(p.generators(), std::move(rel));
  out.new_null_homologous_in_source = is_null_homologous(new_relator, p);
  out.old_null_homologous_in_result = is_null_homologous(out.old_relator, out.result);
  return out;
}

}  // namespace

RelatorDelta crossing_change_relator_delta(const WirtingerPresentation& wp,
                                           std::size_t crossing) {
  const auto& wc = wp.crossings.at(crossing);
  return one_relator_delta(
      wp, crossing, wirtinger_relator(wc.out_arc, wc.in_arc, wc.over_arc, -wc.sign));
}

RelatorDelta virtualize_relator_delta(const WirtingerPresentation& wp,
                                      std::size_t crossing) {
  const auto& wc = wp.crossings.at(crossing);
  Word new_rel(std::vector<Letter>{Letter{wc.out_arc, 1}, Letter{wc.in_arc, -1}});
  return one_relator_delta(wp, crossing, new_rel);
}

// ---------------------------------------------------------------------------
// simplification and canonical form

GaussCode simplify_code(GaussCode gc) {
  bool changed = true;
  while (changed) {
    changed = false;
    const std::size_t len = gc.entries.size();
    if (len == 0) break;

    // R1: cyclically adjacent letters of one crossing
    for (std::size_t i = 0; i < len && !changed; ++i) {
      std::size_t j = (i + 1) % len;
      if (i != j && gc.entries[i].id == gc.entries[j].id) {
        gc = virtualize(gc, gc.entries[i].id);  // same removal, then relabel
        changed = true;
      }
    }
    if (changed) continue;

    // R2: O_i adjacent to O_j, U_i adjacent to U_j, opposite signs
    std::map<int, std::size_t> opos, up;
    for (std::size_t i = 0; i < len; ++i)
      (gc.entries[i].over ? opos : up)[gc.entries[i].id] = i;
    auto adjacent = [&](std::size_t a, std::size_t b) {
      std::size_t d = a > b ? a - b : b - a;
      return d == 1 || d == len - 1;
    };
    const std::size_t n = gc.crossing_count();
    for (int i = 1; int(i) <= int(n) && !changed; ++i)
      for (int j = i + 1; j <= int(n) && !changed; ++j) {
        if (!adjacent(opos[i], opos[j]) || !adjacent(up[i], up[j])) continue;
        int si = 0, sj = 0;
        for (const auto& e : gc.entries) {
          if (e.id == i) si = e.sign;
          if (e.id == j) sj = e.sign;
        }
        if (si != -sj) continue;
        GaussCode next;
        for (const auto& e : gc.entries)
          if (e.id != i && e.id != j) next.entries.push_back(e);
        gc = compact_ids(std::move(next));
        changed = true;
      }
  }
  return gc;
}

GaussCode canonical_code(const GaussCode& gc) {
  const std::size_t len = gc.entries.size();
  if (len == 0) return gc;

  auto relabel = [](std::vector<GaussEntry> seq) {
    std::map<int, int> remap;
    int next = 1;
    for (auto& e : seq) {
      auto it = remap.find(e.id);
      if (it == remap.end()) it = remap.emplace(e.id, next++).first;
      e.id = it->second;
    }
    return seq;
  };

  std::vector<GaussEntry> best;
  bool have = false;
  for (int dir = 0; dir < 2; ++dir) {
    std::vector<GaussEntry> base = gc.entries;
    if (dir) std::reverse(base.begin(), base.end());
    for (std::size_t rot = 0; rot < len; ++rot) {
      std::vector<GaussEntry> cand(base.begin() + long(rot), base.end());
      cand.insert(cand.end(), base.begin(), base.begin() + long(rot));
      cand = relabel(std::move(cand));
      if (!have || cand < best) {
        best = std::move(cand);
        have = true;
      }
    }
  }
  GaussCode out;
  out.entries = std::move(best);
  return out;
}

// ---------------------------------------------------------------------------
// unknottability search

std::optional<UnknottabilityCertificate> unknottability_search(const GaussCode& gc,
                                                               std::size_t max_virt,
                                                               std::size_t max_cc) {
  struct State {
    GaussCode code;
    std::size_t virt, cc;
    std::vector<UnknottingMove> moves;
  };

  GaussCode start = canonical_code(simplify_code(gc));
  if (start.empty())
    return UnknottabilityCertificate{{}, 0, 0};

  std::set<std::tuple<std::string, std::size_t, std::size_t>> visited;
  std::deque<State> frontier;
  frontier.push_back(State{start, 0, 0, {}});
  visited.insert({start.str(), 0, 0});
  const std::size_t state_cap = 100000;

  while (!frontier.empty()) {
    State cur = std::move(frontier.front());
    frontier.pop_front();
    const std::size_t n = cur.code.crossing_count();
    for (int id = 1; id <= int(n); ++id) {
      for (int kind = 0; kind < 2; ++kind) {
        bool is_virt = kind == 0;
        if (is_virt && cur.virt >= max_virt) continue;
        if (!is_virt && cur.cc >= max_cc) continue;
        GaussCode moved = is_virt ? virtualize(cur.code, id) : crossing_change(cur.code, id);
        GaussCode next = canonical_code(simplify_code(std::move(moved)));
        std::size_t nv = cur.virt + (is_virt ? 1 : 0);
        std::size_t nc = cur.cc + (is_virt ? 0 : 1);
        auto key = std::make_tuple(next.str(), nv, nc);
        if (visited.count(key)) continue;
        if (visited.size() >= state_cap) return std::nullopt;
        visited.insert(key);
        std::vector<UnknottingMove> moves = cur.moves;
        moves.push_back(UnknottingMove{is_virt, id});
        if (next.empty())
          return UnknottabilityCertificate{std::move(moves), nv, nc};
        frontier.push_back(State{std::move(next), nv, nc, std::move(moves)});
      }
    }
  }
  return std::nullopt;
}

bool replay_unknottability(const GaussCode& gc, const UnknottabilityCertificate& cert) {
  GaussCode cur = canonical_code(simplify_code(gc));
  std::size_t virt = 0, cc = 0;
  for (const auto& mv : cert.moves) {
    if (mv.id < 1 || mv.id > int(cur.crossing_count())) return false;
    cur = mv.virtualization ? virtualize(cur, mv.id) : crossing_change(cur, mv.id);
    cur = canonical_code(simplify_code(std::move(cur)));
    ++(mv.virtualization ? virt : cc);
  }
  return cur.empty() && virt == cert.virtualizations && cc == cert.crossing_changes;
}

UnknotVerdict unknot_verdict(const Presentation& p, std::size_t tietze_budget) {
  try {
    if (!(alexander_polynomial(p) == Laurent(Int(1)))) return UnknotVerdict::unknown;
  } catch (const hypothesis_error&) {
    return UnknotVerdict::unknown;
  }
  auto t = tietze_simplify(p, tietze_budget);
  if (t.rank_upper_bound == 1 && t.simplified.relators().empty())
    return UnknotVerdict::unknot;
  return UnknotVerdict::unknown;
}

// ---------------------------------------------------------------------------
// braids

BraidWord BraidWord::parse(const std::string& text) {
  BraidWord b;
  std::istringstream in(text);
  std::string tok;
  int max_index = 0;
  while (in >> tok) {
    int sign = 1;
    std::string body = tok;
    if (auto pos = tok.find('^'); pos != std::string::npos) {
      if (tok.substr(pos) != "^-1")
        throw parse_error("braid parse error: bad token \"" + tok + "\"");
      body = tok.substr(0, pos);
      sign = -1;
    }
    if (body.size() < 2 || body[0] != 's')
      throw parse_error("braid parse error: bad token \"" + tok + "\"");
    int idx = 0;
    for (std::size_t i = 1; i < body.size(); ++i) {
      if (!std::isdigit((unsigned char)body[i]))
        throw parse_error("braid parse error: bad token \"" + tok + "\"");
      idx = idx * 10 + (body[i] - '0');
    }
    if (idx < 1) throw parse_error("braid generator index must be >= 1");
    max_index = std::max(max_index, idx);
    b.letters.push_back(sign * idx);
  }
  b.strands = max_index + 1;
  return b;
}

std::string BraidWord::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out << " ";
    out << "s" << std::abs(letters[i]);
    if (letters[i] < 0) out << "^-1";
  }
  return out.str();
}

PDCode pd_from_braid(const BraidWord& b) {
  if (b.letters.empty()) throw parse_error("empty braid word");
  const int k = b.strands;

  DiagramBuilder d;
  // strand tops; port 0 receives the closure arc, port 1 feeds the braid
  std::vector<int> tops;
  std::vector<DiagramBuilder::End> cur;
  for (int i = 0; i < k; ++i) {
    tops.push_back(d.new_joint());
    cur.push_back({tops.back(), 1});
  }
  for (int letter : b.letters) {
    int i = std::abs(letter) - 1;
    if (i + 1 >= k) throw parse_error("braid generator index out of range");
    // ports counterclockwise: 0 = N-left, 1 = S-left, 2 = S-right, 3 = N-right;
    // the (0,2) strand runs top-left to bottom-right and is the overstrand of
    // a positive Artin generator
    int c = d.new_crossing(/*under_02=*/letter < 0);
    d.connect(cur[std::size_t(i)], {c, 0});
    d.connect(cur[std::size_t(i) + 1], {c, 3});
    cur[std::size_t(i)] = {c, 1};
    cur[std::size_t(i) + 1] = {c, 2};
  }
  for (int i = 0; i < k; ++i) d.connect(cur[std::size_t(i)], {tops[std::size_t(i)], 0});
  return d.trace_knot();
}

}  // namespace mq
