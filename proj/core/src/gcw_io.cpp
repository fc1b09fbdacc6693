#include "bredon/gcw_io.hpp"

#include <fstream>
#include <memory>
#include <sstream>

#include "bredon/errors.hpp"

namespace bredon {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

long parse_long(const std::string& tok, std::size_t line) {
  try {
    std::size_t pos = 0;
    long v = std::stol(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
}

// key=value option on a directive line
std::string option_value(const std::vector<std::string>& toks, const std::string& key,
                         std::size_t line) {
  for (const auto& t : toks) {
    auto eq = t.find('=');
    if (eq != std::string::npos && t.substr(0, eq) == key) return t.substr(eq + 1);
  }
  throw ParseError(line, "missing " + key + "=...");
}

struct RawGroup {
  std::size_t line = 0;
  std::string name;
  std::string kind;
  std::size_t degree = 0;
  std::vector<std::vector<long>> gen_lines;   // perm/matrix generators
  std::vector<std::vector<long>> row_lines;   // table rows
  std::vector<long> gens_line;                // optional generator indices (table kind)
};

struct RawFace {
  std::size_t line = 0;
  std::string from, to;
  long coeff = 0;
  std::vector<std::pair<std::size_t, std::vector<std::string>>> hom_lines;  // (line, tokens)
};

struct RawCell {
  std::size_t line = 0;
  std::string id;
  long dim = 0;
  std::string stab;
};

struct RawExtension {
  std::size_t line = 0;
  std::string group;
  long center = 0;
  long order = 1;
};

// Word in the target group's generators: `1`, `g<i>`, `g<i>^<e>`, `e<idx>`.
int eval_word(const FiniteGroup& g, const std::vector<std::string>& toks, std::size_t start,
              std::size_t line) {
  int acc = 0;
  bool any = false;
  for (std::size_t i = start; i < toks.size(); ++i) {
    const std::string& t = toks[i];
    any = true;
    if (t == "1") continue;
    if (t.size() >= 2 && t[0] == 'e') {
      long idx = parse_long(t.substr(1), line);
      if (idx < 0 || static_cast<std::size_t>(idx) >= g.order())
        throw ParseError(line, "element index out of range in word");
      acc = g.mul(acc, static_cast<int>(idx));
      continue;
    }
    if (t.size() >= 2 && t[0] == 'g') {
      std::string body = t.substr(1);
      long expo = 1;
      auto caret = body.find('^');
      if (caret != std::string::npos) {
        expo = parse_long(body.substr(caret + 1), line);
        body = body.substr(0, caret);
      }
      long gi = parse_long(body, line);
      if (gi < 0 || static_cast<std::size_t>(gi) >= g.generators.size())
        throw ParseError(line, "generator index g" + std::to_string(gi) + " out of range");
      int gen = g.generators[static_cast<std::size_t>(gi)];
      long o = g.element_order(gen);
      long e = ((expo % o) + o) % o;
      for (long r = 0; r < e; ++r) acc = g.mul(acc, gen);
      continue;
    }
    throw ParseError(line, "bad word token '" + t + "'");
  }
  if (!any) throw ParseError(line, "empty word");
  return acc;
}

}  // namespace

EquivariantCellComplex parse_complex(const std::string& text, std::size_t group_cap) {
  std::vector<RawGroup> rgroups;
  std::vector<RawCell> rcells;
  std::vector<RawFace> rfaces;
  std::vector<RawExtension> rexts;
  std::string name, note;

  std::istringstream is(text);
  std::string line;
  std::size_t lineno = 0;
  RawGroup* cur_group = nullptr;
  RawFace* cur_face = nullptr;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];

    if (kw == "group") {
      if (toks.size() != 4) throw ParseError(lineno, "usage: group <name> <kind> <degree>");
      RawGroup rg;
      rg.line = lineno;
      rg.name = toks[1];
      rg.kind = toks[2];
      if (rg.kind != "perm" && rg.kind != "matrix" && rg.kind != "table")
        throw ParseError(lineno, "group kind must be perm, matrix or table");
      long deg = parse_long(toks[3], lineno);
      if (deg < 1) throw ParseError(lineno, "group degree must be positive");
      rg.degree = static_cast<std::size_t>(deg);
      rgroups.push_back(std::move(rg));
      cur_group = &rgroups.back();
      cur_face = nullptr;
    } else if (kw == "gen") {
      if (!cur_group || cur_group->kind == "table")
        throw ParseError(lineno, "gen line outside a perm/matrix group block");
      std::vector<long> data;
      for (std::size_t i = 1; i < toks.size(); ++i) data.push_back(parse_long(toks[i], lineno));
      cur_group->gen_lines.push_back(std::move(data));
    } else if (kw == "row") {
      if (!cur_group || cur_group->kind != "table")
        throw ParseError(lineno, "row line outside a table group block");
      std::vector<long> data;
      for (std::size_t i = 1; i < toks.size(); ++i) data.push_back(parse_long(toks[i], lineno));
      cur_group->row_lines.push_back(std::move(data));
    } else if (kw == "gens") {
      if (!cur_group || cur_group->kind != "table")
        throw ParseError(lineno, "gens line outside a table group block");
      for (std::size_t i = 1; i < toks.size(); ++i)
        cur_group->gens_line.push_back(parse_long(toks[i], lineno));
    } else if (kw == "extension") {
      if (toks.size() < 2) throw ParseError(lineno, "usage: extension <group> center=<i> order=<n>");
      RawExtension re;
      re.line = lineno;
      re.group = toks[1];
      re.center = parse_long(option_value(toks, "center", lineno), lineno);
      re.order = parse_long(option_value(toks, "order", lineno), lineno);
      rexts.push_back(re);
      cur_group = nullptr;
      cur_face = nullptr;
    } else if (kw == "cell") {
      if (toks.size() < 2) throw ParseError(lineno, "usage: cell <id> dim=<d> stab=<group>");
      RawCell rc;
      rc.line = lineno;
      rc.id = toks[1];
      rc.dim = parse_long(option_value(toks, "dim", lineno), lineno);
      rc.stab = option_value(toks, "stab", lineno);
      if (rc.dim < 0) throw ParseError(lineno, "cell dimension must be nonnegative");
      rcells.push_back(std::move(rc));
      cur_group = nullptr;
      cur_face = nullptr;
    } else if (kw == "face") {
      if (toks.size() < 3) throw ParseError(lineno, "usage: face <from> <to> coeff=<c>");
      RawFace rf;
      rf.line = lineno;
      rf.from = toks[1];
      rf.to = toks[2];
      rf.coeff = parse_long(option_value(toks, "coeff", lineno), lineno);
      rfaces.push_back(std::move(rf));
      cur_face = &rfaces.back();
      cur_group = nullptr;
    } else if (kw == "hom") {
      if (!cur_face) throw ParseError(lineno, "hom line outside a face block");
      if (toks.size() < 2) throw ParseError(lineno, "usage: hom <gen-index> <word>");
      cur_face->hom_lines.emplace_back(lineno, toks);
    } else if (kw == "name") {
      name = line.substr(line.find("name") + 5);
    } else if (kw == "note") {
      note = line.substr(line.find("note") + 5);
    } else {
      throw ParseError(lineno, "unknown directive '" + kw + "'");
    }
  }

  EquivariantCellComplex x;
  x.name = name;
  x.note = note;

  for (const auto& rg : rgroups) {
    if (x.groups.count(rg.name))
      throw ParseError(rg.line, "group " + rg.name + " declared twice");
    try {
      FiniteGroup g;
      if (rg.kind == "perm") {
        for (const auto& gl : rg.gen_lines)
          if (gl.size() != rg.degree)
            throw ParseError(rg.line, "permutation generators need " +
                                          std::to_string(rg.degree) + " images");
        g = close_permutation_group(rg.gen_lines, rg.degree, group_cap, rg.name);
      } else if (rg.kind == "matrix") {
        for (const auto& gl : rg.gen_lines)
          if (gl.size() != rg.degree * rg.degree)
            throw ParseError(rg.line, "matrix generators need " +
                                          std::to_string(rg.degree * rg.degree) + " entries");
        g = close_matrix_group(rg.gen_lines, rg.degree, group_cap, rg.name);
      } else {
        if (rg.row_lines.size() != rg.degree)
          throw ParseError(rg.line, "table group needs " + std::to_string(rg.degree) + " rows");
        std::vector<int> mul;
        for (const auto& row : rg.row_lines) {
          if (row.size() != rg.degree)
            throw ParseError(rg.line, "table rows need " + std::to_string(rg.degree) + " entries");
          for (long v : row) mul.push_back(static_cast<int>(v));
        }
        g = group_from_table(mul, rg.degree, rg.name);
        if (!rg.gens_line.empty()) {
          g.generators.clear();
          for (long v : rg.gens_line) {
            if (v < 1 || static_cast<std::size_t>(v) >= g.order())
              throw ParseError(rg.line, "gens index out of range");
            g.generators.push_back(static_cast<int>(v));
          }
          // regenerate words over the declared generators
          auto closed = subgroup_generated(g, g.generators);
          if (closed.size() != g.order())
            throw ParseError(rg.line, "gens do not generate the table group");
          std::vector<std::pair<int, int>> parent(g.order(), {-1, -1});
          std::vector<int> queue{0};
          std::vector<bool> seen(g.order(), false);
          seen[0] = true;
          for (std::size_t qi = 0; qi < queue.size(); ++qi)
            for (std::size_t gi = 0; gi < g.generators.size(); ++gi) {
              int c = g.mul(queue[qi], g.generators[gi]);
              if (!seen[static_cast<std::size_t>(c)]) {
                seen[static_cast<std::size_t>(c)] = true;
                parent[static_cast<std::size_t>(c)] = {queue[qi], static_cast<int>(gi)};
                queue.push_back(c);
              }
            }
          g.bfs_parent = std::move(parent);
        }
      }
      x.group_order.push_back(rg.name);
      x.groups.emplace(rg.name, std::make_shared<FiniteGroup>(std::move(g)));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(rg.line, e.what());
    }
  }

  for (const auto& re : rexts) {
    auto it = x.groups.find(re.group);
    if (it == x.groups.end())
      throw UnknownGroup(re.line, "extension names unknown group " + re.group);
    CentralExtensionData ext{it->second, static_cast<int>(re.center), re.order};
    try {
      validate_extension(ext);
    } catch (const Error& e) {
      throw ParseError(re.line, e.what());
    }
    x.extensions.emplace(re.group, std::move(ext));
  }

  for (const auto& rc : rcells) {
    if (x.find_cell(rc.id)) throw ParseError(rc.line, "cell " + rc.id + " declared twice");
    auto it = x.groups.find(rc.stab);
    if (it == x.groups.end())
      throw UnknownGroup(rc.line, "cell " + rc.id + " names unknown group " + rc.stab);
    CellOrbit c;
    c.id = rc.id;
    c.dim = static_cast<int>(rc.dim);
    c.stabilizer_name = rc.stab;
    c.stabilizer = it->second;
    x.cells.push_back(std::move(c));
  }

  for (const auto& rf : rfaces) {
    const CellOrbit* from = x.find_cell(rf.from);
    const CellOrbit* to = x.find_cell(rf.to);
    if (!from) throw UnknownCell(rf.line, "face names unknown cell " + rf.from);
    if (!to) throw UnknownCell(rf.line, "face names unknown cell " + rf.to);
    if (from->dim != to->dim + 1)
      throw DimensionMismatch(rf.line, "face " + rf.from + " -> " + rf.to +
                                           " must drop exactly one dimension");
    const auto& src = from->stabilizer;
    const auto& dst = to->stabilizer;
    std::vector<int> gen_images(src->generators.size(), -1);
    for (const auto& [hl, toks] : rf.hom_lines) {
      long gi = parse_long(toks[1], hl);
      if (gi < 0 || static_cast<std::size_t>(gi) >= src->generators.size())
        throw BadHomomorphism(hl, "hom generator index out of range");
      gen_images[static_cast<std::size_t>(gi)] = eval_word(*dst, toks, 2, hl);
    }
    for (std::size_t gi = 0; gi < gen_images.size(); ++gi)
      if (gen_images[gi] < 0)
        throw BadHomomorphism(rf.line, "face " + rf.from + " -> " + rf.to +
                                           " misses a hom line for generator " +
                                           std::to_string(gi));
    auto hom = homomorphism_from_generator_images(src, dst, gen_images);
    if (!hom) {
      // recompute the violating pair for the diagnostic
      GroupHomomorphism probe{src, dst, std::vector<int>(src->order(), 0)};
      probe.images[0] = 0;
      for (std::size_t a = 1; a < src->order(); ++a) {
        const auto& [parent, gen] = src->bfs_parent[a];
        probe.images[a] = dst->mul(probe.images[parent], gen_images[static_cast<std::size_t>(gen)]);
      }
      auto bad = probe.first_violation();
      std::string pair = bad ? (" at pair (" + std::to_string(bad->first) + "," +
                                std::to_string(bad->second) + ")")
                             : "";
      throw BadHomomorphism(rf.line, "face " + rf.from + " -> " + rf.to +
                                         " generator images do not extend to a homomorphism" +
                                         pair);
    }
    if (!hom->is_injective())
      throw BadHomomorphism(rf.line,
                            "face " + rf.from + " -> " + rf.to + " homomorphism not injective");
    Incidence inc;
    inc.from = rf.from;
    inc.to = rf.to;
    inc.coeff = rf.coeff;
    inc.hom = std::move(*hom);
    x.incidences.push_back(std::move(inc));
  }

  return x;
}

EquivariantCellComplex load_complex_file(const std::string& path, std::size_t group_cap) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_complex(ss.str(), group_cap);
}

std::string serialize_complex(const EquivariantCellComplex& x) {
  std::ostringstream os;
  if (!x.name.empty()) os << "name " << x.name << "\n";
  if (!x.note.empty()) os << "note " << x.note << "\n";
  for (const auto& nm : x.group_order) {
    const auto& g = x.groups.at(nm);
    switch (g->origin.kind) {
      case GroupOriginKind::Permutations:
        os << "group " << nm << " perm " << g->origin.degree << "\n";
        for (const auto& gen : g->origin.generator_data) {
          os << "gen";
          for (long v : gen) os << " " << v;
          os << "\n";
        }
        break;
      case GroupOriginKind::Matrices:
        os << "group " << nm << " matrix " << g->origin.degree << "\n";
        for (const auto& gen : g->origin.generator_data) {
          os << "gen";
          for (long v : gen) os << " " << v;
          os << "\n";
        }
        break;
      case GroupOriginKind::Table: {
        os << "group " << nm << " table " << g->order() << "\n";
        for (std::size_t a = 0; a < g->order(); ++a) {
          os << "row";
          for (std::size_t b = 0; b < g->order(); ++b)
            os << " " << g->mul(static_cast<int>(a), static_cast<int>(b));
          os << "\n";
        }
        bool default_gens = g->generators.size() + 1 == g->order();
        if (default_gens)
          for (std::size_t i = 0; i < g->generators.size(); ++i)
            if (g->generators[i] != static_cast<int>(i + 1)) default_gens = false;
        if (!default_gens && !g->generators.empty()) {
          os << "gens";
          for (int v : g->generators) os << " " << v;
          os << "\n";
        }
        break;
      }
    }
  }
  for (const auto& [nm, ext] : x.extensions)
    os << "extension " << nm << " center=" << ext.center_gen << " order=" << ext.n << "\n";
  for (const auto& c : x.cells)
    os << "cell " << c.id << " dim=" << c.dim << " stab=" << c.stabilizer_name << "\n";
  for (const auto& inc : x.incidences) {
    os << "face " << inc.from << " " << inc.to << " coeff=" << inc.coeff << "\n";
    const auto& src = inc.hom.source;
    const auto& dst = inc.hom.target;
    for (std::size_t gi = 0; gi < src->generators.size(); ++gi) {
      int img = inc.hom.images[static_cast<std::size_t>(src->generators[gi])];
      os << "hom " << gi;
      auto word = dst->generator_word(img);
      if (word.empty()) {
        os << " 1";
      } else {
        for (int w : word) os << " g" << w;
      }
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace bredon
