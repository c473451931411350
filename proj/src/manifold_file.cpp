#include "swsurg/manifold_file.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "swsurg/errors.hpp"

namespace swsurg {

using nlohmann::json;

namespace {

const Integer kMaxJsonNumber("9007199254740991");  // 2^53 - 1

class Reader {
 public:
  explicit Reader(const json& root) : root_(root) {}

  ManifoldFile read() {
    ManifoldFile file;
    const json& top = object(root_, "");
    file.schema_version = string(field(top, "", "schema_version"), "/schema_version");
    if (file.schema_version != kSchemaVersion)
      throw ParseError("unsupported schema_version \"" + file.schema_version + "\"", "/schema_version");

    const json& m = object(field(top, "", "manifold"), "/manifold");
    FourManifold& x = file.manifold;
    x.name = string(field(m, "/manifold", "name"), "/manifold/name");
    x.chi = integer(field(m, "/manifold", "chi"), "/manifold/chi");
    x.sigma = integer(field(m, "/manifold", "sigma"), "/manifold/sigma");
    x.simple_type = boolean(field(m, "/manifold", "simple_type"), "/manifold/simple_type");

    const json& rows = array(field(m, "/manifold", "gram"), "/manifold/gram");
    IntMatrix gram(rows.size(), rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::string where = "/manifold/gram/" + std::to_string(r);
      const json& row = array(rows[r], where);
      if (row.size() != rows.size())
        throw ParseError("gram row has " + std::to_string(row.size()) + " entries, expected " +
                             std::to_string(rows.size()),
                         where);
      for (std::size_t c = 0; c < row.size(); ++c) gram(r, c) = integer(row[c], where + "/" + std::to_string(c));
    }
    if (!gram.is_symmetric()) throw ValidationError({"symmetry: gram matrix is not symmetric"});
    x.lattice = IntegerLattice(std::move(gram));

    const json& classes = array(field(m, "/manifold", "basic_classes"), "/manifold/basic_classes");
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const std::string where = "/manifold/basic_classes/" + std::to_string(i);
      const json& entry = object(classes[i], where);
      x.basic_classes.push_back({vector(field(entry, where, "coords"), where + "/coords"),
                                 integer(field(entry, where, "sw"), where + "/sw")});
    }
    if (m.contains("basis_labels")) x.basis_labels = strings(m["basis_labels"], "/manifold/basis_labels");
    if (m.contains("conventions")) x.conventions = strings(m["conventions"], "/manifold/conventions");

    if (top.contains("surfaces")) {
      const json& surfaces = object(top["surfaces"], "/surfaces");
      for (const auto& [name, value] : surfaces.items()) {
        const std::string where = "/surfaces/" + name;
        const json& s = object(value, where);
        SurfaceEmbedding surface;
        surface.surface_class = vector(field(s, where, "class"), where + "/class");
        const Integer genus = integer(field(s, where, "genus"), where + "/genus");
        if (!genus.fits_sint_p()) throw ParseError("genus out of range", where + "/genus");
        surface.genus = static_cast<int>(genus.get_si());
        if (s.contains("dual")) surface.dual_class = vector(s["dual"], where + "/dual");
        file.surfaces.emplace(name, std::move(surface));
      }
    }
    return file;
  }

 private:
  static const json& field(const json& obj, const std::string& where, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(std::string("missing field \"") + key + "\"", where.empty() ? "/" : where);
    return *it;
  }
  static const json& object(const json& v, const std::string& where) {
    if (!v.is_object()) throw ParseError("expected an object", where.empty() ? "/" : where);
    return v;
  }
  static const json& array(const json& v, const std::string& where) {
    if (!v.is_array()) throw ParseError("expected an array", where);
    return v;
  }
  static std::string string(const json& v, const std::string& where) {
    if (!v.is_string()) throw ParseError("expected a string", where);
    return v.get<std::string>();
  }
  static bool boolean(const json& v, const std::string& where) {
    if (!v.is_boolean()) throw ParseError("expected true or false", where);
    return v.get<bool>();
  }
  static Integer integer(const json& v, const std::string& where) {
    if (v.is_number_integer()) {
      Integer out = v.is_number_unsigned() ? Integer(std::to_string(v.get<std::uint64_t>()))
                                           : Integer(std::to_string(v.get<std::int64_t>()));
      if (abs(out) > kMaxJsonNumber) throw ParseError("integers beyond 2^53-1 must be written as strings", where);
      return out;
    }
    if (v.is_string()) {
      const std::string& s = v.get_ref<const std::string&>();
      const std::size_t digits_from = (!s.empty() && s[0] == '-') ? 1 : 0;
      if (s.size() == digits_from || !std::all_of(s.begin() + digits_from, s.end(), ::isdigit))
        throw ParseError("\"" + s + "\" is not a decimal integer", where);
      return Integer(s, 10);
    }
    throw ParseError(v.is_number() ? "expected an integer, got a fractional or oversized number"
                                   : "expected an integer",
                     where);
  }
  static LatticeVector vector(const json& v, const std::string& where) {
    const json& a = array(v, where);
    std::vector<Integer> coords;
    coords.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) coords.push_back(integer(a[i], where + "/" + std::to_string(i)));
    return LatticeVector(std::move(coords));
  }
  static std::vector<std::string> strings(const json& v, const std::string& where) {
    const json& a = array(v, where);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(string(a[i], where + "/" + std::to_string(i)));
    return out;
  }

  const json& root_;
};

void render(const json& v, Style style, int depth, std::string& out) {
  const auto scalar = [](const json& e) { return !e.is_object() && !e.is_array(); };
  if (style == Style::Canonical || scalar(v)) {
    out += v.dump();
    return;
  }
  const std::string indent(2 * (depth + 1), ' ');
  const std::string closing(2 * depth, ' ');
  if (v.is_array()) {
    if (v.empty()) {
      out += "[]";
      return;
    }
    if (std::all_of(v.begin(), v.end(), scalar)) {
      out += '[';
      for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].dump();
      out += ']';
      return;
    }
    // Matrices: one row per line.
    out += "[\n";
    for (std::size_t i = 0; i < v.size(); ++i) {
      out += indent;
      render(v[i], style, depth + 1, out);
      out += i + 1 < v.size() ? ",\n" : "\n";
    }
    out += closing + "]";
    return;
  }
  if (v.empty()) {
    out += "{}";
    return;
  }
  out += "{\n";
  std::size_t i = 0;
  for (const auto& [key, value] : v.items()) {
    out += indent + json(key).dump() + ": ";
    render(value, style, depth + 1, out);
    out += ++i < v.size() ? ",\n" : "\n";
  }
  out += closing + "}";
}

}  // namespace

Style style_from_environment() {
  const char* env = std::getenv("SWSURG_CANONICAL");
  return env && std::string_view(env) == "1" ? Style::Canonical : Style::Pretty;
}

ManifoldFile parse_manifold_file(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), "byte " + std::to_string(e.byte));
  }
  ManifoldFile file;
  try {
    file = Reader(root).read();
  } catch (const InvalidInput& e) {
    throw ValidationError({e.what()});
  }

  std::vector<std::string> failures = validate(file.manifold).errors;
  for (const auto& [name, surface] : file.surfaces)
    for (const auto& e : validate_surface(file.manifold, surface).errors) failures.push_back("surface " + name + " " + e);
  if (!failures.empty()) throw ValidationError(std::move(failures));
  return file;
}

ManifoldFile read_manifold_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file", path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_manifold_file(buffer.str());
}

json integer_to_json(const Integer& v) {
  if (abs(v) <= kMaxJsonNumber) return json(v.get_si());
  return json(v.get_str());
}

json vector_to_json(const LatticeVector& v) {
  json a = json::array();
  for (const auto& c : v.coords()) a.push_back(integer_to_json(c));
  return a;
}

json to_json(const ManifoldFile& file) {
  const FourManifold& x = file.manifold;
  json m;
  m["name"] = x.name;
  m["chi"] = integer_to_json(x.chi);
  m["sigma"] = integer_to_json(x.sigma);
  m["simple_type"] = x.simple_type;
  json gram = json::array();
  for (std::size_t r = 0; r < x.lattice.rank(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < x.lattice.rank(); ++c) row.push_back(integer_to_json(x.lattice.gram()(r, c)));
    gram.push_back(std::move(row));
  }
  m["gram"] = std::move(gram);

  std::vector<BasicClass> classes = x.basic_classes;
  std::sort(classes.begin(), classes.end(), [](const BasicClass& a, const BasicClass& b) { return a.k < b.k; });
  json jc = json::array();
  for (const auto& bc : classes) jc.push_back({{"coords", vector_to_json(bc.k)}, {"sw", integer_to_json(bc.sw)}});
  m["basic_classes"] = std::move(jc);
  if (!x.basis_labels.empty()) m["basis_labels"] = x.basis_labels;
  if (!x.conventions.empty()) m["conventions"] = x.conventions;

  json root;
  root["schema_version"] = file.schema_version;
  root["manifold"] = std::move(m);
  if (!file.surfaces.empty()) {
    json surfaces = json::object();
    for (const auto& [name, s] : file.surfaces) {
      json js;
      js["class"] = vector_to_json(s.surface_class);
      js["genus"] = s.genus;
      if (s.dual_class) js["dual"] = vector_to_json(*s.dual_class);
      surfaces[name] = std::move(js);
    }
    root["surfaces"] = std::move(surfaces);
  }
  return root;
}

std::string render_json(const json& value, Style style) {
  std::string out;
  render(value, style, 0, out);
  out += '\n';
  return out;
}

std::string serialize(const ManifoldFile& file, Style style) { return render_json(to_json(file), style); }

void write_file_atomically(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < length; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return os.str();
}

}  // namespace swsurg
