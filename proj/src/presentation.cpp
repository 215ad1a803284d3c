#include "bikei/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "bikei/errors.hpp"

namespace bikei {

std::vector<std::string> default_generator_names(int count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (int i = 0; i < count; ++i)
    names.push_back(count <= 26 ? std::string(1, static_cast<char>('a' + i))
                                : "g" + std::to_string(i + 1));
  return names;
}

void Presentation::validate() const {
  if (generator_count < 0) throw InputError("negative generator count");
  if (static_cast<int>(component_of.size()) != generator_count ||
      static_cast<int>(names.size()) != generator_count)
    throw InputError("presentation generator metadata has the wrong length");
  for (int c : component_of)
    if (c < 0 || c >= component_count()) throw InputError("generator component out of range");
  for (const Relation& r : relations)
    for (int g : {r.in_first, r.in_second, r.out_first, r.out_second})
      if (g < 0 || g >= generator_count) throw InputError("relation index out of range");
}

Presentation extract_presentation(const LinkDiagram& diagram,
                                  const std::vector<int>& reversed_components) {
  const LinkDiagram d =
      reversed_components.empty() ? diagram : diagram.reversed(reversed_components);
  Presentation p;
  p.generator_count = d.semiarc_count;
  p.component_of = d.component_of;
  p.writhe.assign(d.component_count, 0);
  p.names = default_generator_names(d.semiarc_count);
  for (const Crossing& c : d.crossings) {
    if (c.positive)
      p.relations.push_back({c.in_left, c.in_right, c.out_left, c.out_right, true});
    else
      p.relations.push_back({c.out_left, c.out_right, c.in_left, c.in_right, false});
    const int comp = d.component_of[c.in_left];
    if (comp == d.component_of[c.in_right]) p.writhe[comp] += c.positive ? 1 : -1;
  }
  return p;
}

namespace {

std::string fresh_name(const std::set<std::string>& taken, int hint) {
  for (int i = hint;; ++i) {
    std::string candidate = "k" + std::to_string(i);
    if (!taken.count(candidate)) return candidate;
  }
}

// Slot of the relation where generator g ends (incoming = true) or starts.
int* strand_slot(std::vector<Relation>& relations, int g, bool incoming) {
  for (Relation& r : relations) {
    if (r.positive == incoming) {
      if (r.in_first == g) return &r.in_first;
      if (r.in_second == g) return &r.in_second;
    } else {
      if (r.out_first == g) return &r.out_first;
      if (r.out_second == g) return &r.out_second;
    }
  }
  return nullptr;
}

}  // namespace

Presentation insert_kinks(const Presentation& p, const std::vector<int>& counts) {
  if (static_cast<int>(counts.size()) != p.component_count())
    throw InputError("kink counts must have one entry per component");
  Presentation out = p;
  std::set<std::string> taken(p.names.begin(), p.names.end());
  int name_hint = 1;
  auto add_generator = [&](int component) {
    const std::string name = fresh_name(taken, name_hint++);
    taken.insert(name);
    out.names.push_back(name);
    out.component_of.push_back(component);
    return out.generator_count++;
  };
  for (int k = 0; k < p.component_count(); ++k) {
    if (counts[k] < 0) throw InputError("kink counts must be non-negative");
    if (counts[k] == 0) continue;
    const auto it = std::find(p.component_of.begin(), p.component_of.end(), k);
    if (it == p.component_of.end())
      throw InputError("component " + std::to_string(k + 1) + " has no generators");
    const int g = static_cast<int>(it - p.component_of.begin());
    for (int i = 0; i < counts[k]; ++i) {
      // Cut g where it enters a crossing; a presentation whose relations
      // were rewritten in the reversed direction may only offer the end
      // where g leaves one, and then the kink sits before g instead.
      const int loop = add_generator(k);
      if (int* slot = strand_slot(out.relations, g, true)) {
        const int exit = add_generator(k);
        // add_generator does not touch relations, so slot stays valid
        *slot = exit;
        out.relations.push_back({g, loop, exit, loop, true});
      } else if (int* slot = strand_slot(out.relations, g, false)) {
        const int entry = add_generator(k);
        *slot = entry;
        out.relations.push_back({entry, loop, g, loop, true});
      } else {
        out.relations.push_back({g, loop, g, loop, true});
      }
    }
    out.writhe[k] += counts[k];
  }
  return out;
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

bool starts_with_key(const std::string& line, const std::string& key, std::string& rest) {
  if (line.rfind(key, 0) != 0) return false;
  rest = line.substr(key.size());
  return true;
}

std::vector<std::string> words(const std::string& s) {
  std::vector<std::string> out;
  std::string cleaned = s;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

bool is_name_char(char c, bool first) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
         (!first && std::isdigit(static_cast<unsigned char>(c)));
}

struct RawRelation {
  std::string names[4];  // in_first, in_second, out_first, out_second
  std::size_t name_pos[4];
  bool positive;
};

// Cursor over one line of relation text.
class RelationScanner {
 public:
  RelationScanner(std::string_view line, std::size_t offset) : line_(line), offset_(offset) {}

  bool at_end() {
    skip(" \t\r,");
    return pos_ >= line_.size();
  }

  RawRelation next() {
    RawRelation rel;
    rel.positive = true;
    skip(" \t\r,");
    if (peek() == '-') {
      rel.positive = false;
      ++pos_;
    }
    skip(" \t");
    if (peek() == 'B') {
      ++pos_;
      pair(rel, 0);
      expect('=');
      pair(rel, 2);
    } else if (peek() == '(') {
      pair(rel, 2);
      expect('=');
      expect('B');
      pair(rel, 0);
    } else {
      fail("expected relation 'B(x,y)=(u,v)'");
    }
    return rel;
  }

 private:
  char peek() const { return pos_ < line_.size() ? line_[pos_] : '\0'; }
  void skip(std::string_view chars) {
    while (pos_ < line_.size() && chars.find(line_[pos_]) != std::string_view::npos) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) {
    const std::size_t end = std::min(line_.size(), pos_ + 8);
    throw ParseError(what, std::string(line_.substr(pos_, end - pos_)), offset_ + pos_);
  }
  void expect(char c) {
    skip(" \t");
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void name(RawRelation& rel, int slot) {
    skip(" \t");
    const std::size_t start = pos_;
    while (pos_ < line_.size() && is_name_char(line_[pos_], pos_ == start)) ++pos_;
    if (pos_ == start) fail("expected generator name");
    rel.names[slot] = std::string(line_.substr(start, pos_ - start));
    rel.name_pos[slot] = offset_ + start;
  }
  void pair(RawRelation& rel, int slot) {
    expect('(');
    name(rel, slot);
    expect(',');
    name(rel, slot + 1);
    expect(')');
  }

  std::string_view line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

Presentation parse_presentation_text(std::string_view text) {
  struct Line {
    std::string content;
    std::size_t offset;
  };
  std::vector<Line> relation_lines;
  std::vector<std::string> gens;
  std::vector<std::string> comp_words, writhe_words;
  bool have_gens = false, have_comp = false, have_writhe = false;

  std::size_t offset = 0;
  while (offset <= text.size()) {
    std::size_t nl = text.find('\n', offset);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string_view raw = text.substr(offset, nl - offset);
    const std::string line = trim(raw);
    std::string rest;
    if (line.empty() || line[0] == '#') {
    } else if (starts_with_key(line, "gens:", rest)) {
      have_gens = true;
      for (auto& w : words(rest)) gens.push_back(w);
    } else if (starts_with_key(line, "comp:", rest)) {
      have_comp = true;
      for (auto& w : words(rest)) comp_words.push_back(w);
    } else if (starts_with_key(line, "writhe:", rest)) {
      have_writhe = true;
      for (auto& w : words(rest)) writhe_words.push_back(w);
    } else {
      relation_lines.push_back({std::string(raw), offset});
    }
    offset = nl + 1;
  }

  std::vector<RawRelation> raw_relations;
  for (const Line& l : relation_lines) {
    RelationScanner scan(l.content, l.offset);
    while (!scan.at_end()) raw_relations.push_back(scan.next());
  }

  std::map<std::string, int> index;
  auto declare = [&](const std::string& n) {
    for (std::size_t i = 0; i < n.size(); ++i)
      if (!is_name_char(n[i], i == 0)) throw InputError("invalid generator name '" + n + "'");
    if (!index.emplace(n, static_cast<int>(index.size())).second)
      throw InputError("duplicate generator '" + n + "'");
  };
  Presentation p;
  if (have_gens) {
    for (const auto& g : gens) declare(g);
    p.names = gens;
  } else {
    std::set<std::string> seen;
    for (const auto& r : raw_relations) seen.insert(std::begin(r.names), std::end(r.names));
    for (const auto& n : seen) declare(n);
    p.names.assign(seen.begin(), seen.end());
  }
  p.generator_count = static_cast<int>(p.names.size());
  for (const auto& r : raw_relations) {
    int ids[4];
    for (int i = 0; i < 4; ++i) {
      auto it = index.find(r.names[i]);
      if (it == index.end()) throw ParseError("unknown generator", r.names[i], r.name_pos[i]);
      ids[i] = it->second;
    }
    p.relations.push_back({ids[0], ids[1], ids[2], ids[3], r.positive});
  }

  p.component_of.assign(p.generator_count, 0);
  int components = 1;
  if (have_comp) {
    std::vector<bool> assigned(p.generator_count, false);
    for (const auto& w : comp_words) {
      const auto eq = w.find('=');
      if (eq == std::string::npos) throw InputError("malformed comp entry '" + w + "'");
      auto it = index.find(w.substr(0, eq));
      if (it == index.end()) throw InputError("unknown generator in comp entry '" + w + "'");
      int c = 0;
      try {
        c = std::stoi(w.substr(eq + 1));
      } catch (const std::exception&) {
        throw InputError("malformed comp entry '" + w + "'");
      }
      if (c < 1) throw InputError("component ids are 1-based: '" + w + "'");
      p.component_of[it->second] = c - 1;
      assigned[it->second] = true;
      components = std::max(components, c);
    }
    for (int g = 0; g < p.generator_count; ++g)
      if (!assigned[g]) throw InputError("generator '" + p.names[g] + "' has no component");
  }
  p.writhe.assign(components, 0);
  if (have_writhe) {
    if (static_cast<int>(writhe_words.size()) != components)
      throw InputError("writhe line needs " + std::to_string(components) + " entries");
    for (int k = 0; k < components; ++k) {
      try {
        p.writhe[k] = std::stoi(writhe_words[k]);
      } catch (const std::exception&) {
        throw InputError("malformed writhe entry '" + writhe_words[k] + "'");
      }
    }
  }
  p.validate();
  return p;
}

Presentation read_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read presentation file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_presentation_text(buf.str());
}

std::string format_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "gens:";
  for (const auto& n : p.names) os << " " << n;
  os << "\ncomp:";
  for (int g = 0; g < p.generator_count; ++g) os << " " << p.names[g] << "=" << p.component_of[g] + 1;
  os << "\nwrithe:";
  for (int w : p.writhe) os << " " << w;
  os << "\n";
  for (const Relation& r : p.relations) {
    os << (r.positive ? "" : "-") << "B(" << p.names[r.in_first] << "," << p.names[r.in_second]
       << ")=(" << p.names[r.out_first] << "," << p.names[r.out_second] << ")\n";
  }
  return os.str();
}

}  // namespace bikei
