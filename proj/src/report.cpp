#include "qiso/report.hpp"

#include <algorithm>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace qiso {

ClassificationRecord to_record(const Classification& c) {
  const auto& d = c.lattice.diagram();
  ClassificationRecord r;
  r.type = d.base().type().to_string();
  r.rank = d.base().rank();
  r.lattice = c.lattice.spec();
  r.characteristic = c.characteristic;
  for (const auto& k : c.classes) {
    ClassRecord cr;
    for (int id : k.omega.nodes) cr.omega.push_back(d.label(id));
    for (const auto& q : k.lambda.coords()) cr.lambda.push_back(to_string(q));
    cr.order = k.order;
    cr.centralizer = k.centralizer;
    cr.component_order = k.component_group.size();
    cr.component_structure = k.component_structure.to_string();
    cr.isolated = k.isolated;
    cr.excluded_primes = k.excluded_primes;
    r.classes.push_back(std::move(cr));
  }
  return r;
}

nlohmann::json to_json(const ClassificationRecord& r) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : r.classes) {
    nlohmann::json centralizer = nlohmann::json::array();
    for (const auto& t : c.centralizer) {
      centralizer.push_back({{"family", std::string(1, static_cast<char>(t.family))}, {"rank", t.rank}});
    }
    classes.push_back({
        {"omega", c.omega},
        {"lambda", c.lambda},
        {"order", c.order},
        {"centralizer", centralizer},
        {"component_group", {{"order", c.component_order}, {"structure", c.component_structure}}},
        {"isolated", c.isolated},
        {"p_condition", {{"excluded_primes", c.excluded_primes}, {"text", format_p_condition(c.excluded_primes)}}},
    });
  }
  return {
      {"group", {{"type", r.type}, {"rank", r.rank}, {"lattice", r.lattice}, {"char", r.characteristic}}},
      {"classes", classes},
  };
}

ClassificationRecord record_from_json(const nlohmann::json& j) {
  try {
    ClassificationRecord r;
    const auto& g = j.at("group");
    r.type = g.at("type").get<std::string>();
    r.rank = g.at("rank").get<int>();
    r.lattice = g.at("lattice").get<std::string>();
    r.characteristic = g.at("char").get<int>();
    for (const auto& c : j.at("classes")) {
      ClassRecord cr;
      cr.omega = c.at("omega").get<std::vector<std::string>>();
      cr.lambda = c.at("lambda").get<std::vector<std::string>>();
      for (const auto& q : cr.lambda) parse_rational(q);
      cr.order = c.at("order").get<std::int64_t>();
      for (const auto& t : c.at("centralizer")) {
        const auto family = t.at("family").get<std::string>();
        if (family.size() != 1) throw std::invalid_argument("bad family '" + family + "'");
        SimpleType st{static_cast<Family>(family[0]), t.at("rank").get<int>()};
        if (!is_legal(st)) throw std::invalid_argument("illegal centralizer component " + family);
        cr.centralizer.push_back(st);
      }
      cr.component_order = c.at("component_group").at("order").get<std::size_t>();
      cr.component_structure = c.at("component_group").at("structure").get<std::string>();
      cr.isolated = c.at("isolated").get<bool>();
      cr.excluded_primes = c.at("p_condition").at("excluded_primes").get<std::vector<int>>();
      r.classes.push_back(std::move(cr));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed classification JSON: ") + e.what());
  }
}

std::string format_p_condition(const std::vector<int>& excluded) {
  if (excluded.empty()) return "";
  if (excluded.size() == 1) return "p != " + std::to_string(excluded.front());
  std::string s = "p not in {";
  for (std::size_t k = 0; k < excluded.size(); ++k) {
    if (k) s += ", ";
    s += std::to_string(excluded[k]);
  }
  return s + "}";
}

namespace {

std::string render_rows(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size(), 0);
  auto measure = [](const std::string& s) {
    // column widths count code points, not bytes
    std::size_t n = 0;
    for (unsigned char ch : s) n += (ch & 0xC0) != 0x80;
    return n;
  };
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = measure(header[c]);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], measure(row[c]));
  }
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) text += " | ";
      text += cells[c];
      if (c + 1 < cells.size()) text += std::string(width[c] - measure(cells[c]), ' ');
    }
    out << text << "\n";
  };
  line(header);
  std::string rule;
  for (std::size_t c = 0; c < width.size(); ++c) {
    if (c) rule += "-+-";
    rule += std::string(width[c], '-');
  }
  out << rule << "\n";
  for (const auto& row : rows) line(row);
  return out.str();
}

std::shared_ptr<const AffineDiagram> diagram_of(const CartanType& t) {
  return std::make_shared<const AffineDiagram>(build_root_system(t));
}

}  // namespace

std::string render_table(const Classification& c) {
  const auto& d = c.lattice.diagram();
  std::vector<std::vector<std::string>> rows;
  bool labelled = false;
  for (const auto& k : c.classes) {
    auto label = classical_label(c.lattice, k);
    labelled = labelled || label.has_value();
    rows.push_back({format_omega(d, k.omega), format_p_condition(k.excluded_primes), std::to_string(k.order),
                    format_components(k.centralizer), std::to_string(k.component_group.size()),
                    k.isolated ? "yes" : "no", label.value_or("")});
  }
  std::vector<std::string> header{"Omega", "p ?", "o(s)", "C°(s)", "|A(s)|", "isolated ?"};
  if (labelled) {
    header.push_back("label");
  } else {
    for (auto& row : rows) row.pop_back();
  }
  std::ostringstream out;
  out << d.base().type().to_string() << ", lattice " << c.lattice.spec() << ", characteristic " << c.characteristic
      << ": " << c.classes.size() << " quasi-isolated classes\n";
  out << render_rows(header, rows);
  return out.str();
}

std::string render_affine_table(const std::vector<CartanType>& types) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& t : types) {
    auto d = diagram_of(t);
    std::string marks;
    for (int id = 0; id < d->num_nodes(); ++id) {
      if (id) marks += " ";
      marks += d->label(id) + ":" + std::to_string(d->node(id).mark);
    }
    std::string gens;
    if (t.is_simple()) {
      for (const auto& g : standard_generators(t.components().front())) gens += (gens.empty() ? "<" : "> x <") + g;
      gens = gens.empty() ? "1" : gens + ">";
    }
    rows.push_back({t.to_string(), marks, gens, std::to_string(d->automorphisms().size())});
  }
  return render_rows({"type", "marks", "A", "|A|"}, rows);
}

std::string render_classical_tables(int rank) {
  std::ostringstream out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    const SimpleType st{f, rank};
    if (!is_legal(st)) continue;
    auto d = diagram_of(CartanType({st}));
    out << render_table(classify(make_lattice(d, "ad"), 0)) << "\n";
  }
  return out.str();
}

std::string render_exceptional_tables() {
  std::ostringstream out;
  for (int rank : {6, 7}) {
    auto d = diagram_of(CartanType(Family::E, rank));
    out << render_table(classify(make_lattice(d, "ad"), 0)) << "\n";
  }
  return out.str();
}

}  // namespace qiso
