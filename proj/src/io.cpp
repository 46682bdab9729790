#include "specscale/io.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace specscale {
namespace {

std::string number(double v) {
  if (!std::isfinite(v)) return "null";
  std::array<char, 40> buf{};
  std::snprintf(buf.data(), buf.size(), "%.17g", v);
  std::string s(buf.data());
  // Keep the value a JSON float even when it is integral.
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

void dump_rec(const Json& j, int indent, int depth, std::string& out) {
  const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
  const std::string close_pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{";
      out += nl;
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) {
          out += ",";
          out += nl;
        }
        first = false;
        out += pad;
        out += Json(k).dump();
        out += indent > 0 ? ": " : ":";
        dump_rec(v, indent, depth + 1, out);
      }
      out += nl;
      out += close_pad;
      out += "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      bool flat = true;
      for (const auto& v : j) flat = flat && !v.is_structured();
      out += "[";
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += flat ? ", " : ",";
        first = false;
        if (!flat) {
          out += nl;
          out += pad;
        }
        dump_rec(v, indent, depth + 1, out);
      }
      if (!flat) {
        out += nl;
        out += close_pad;
      }
      out += "]";
      return;
    }
    case Json::value_t::number_float:
      out += number(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

const Json& field(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError("missing field '" + where + (where.empty() ? "" : ".") + key + "'");
  }
  return j.at(key);
}

Eigen::MatrixXd real_array(const Json& j, Eigen::Index n, const std::string& where) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != n) {
    throw DimensionError("field '" + where + "' must be an array of " + std::to_string(n) + " rows");
  }
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw DimensionError("field '" + where + "' row " + std::to_string(i) + " must have " +
                           std::to_string(n) + " entries");
    }
    for (Eigen::Index k = 0; k < n; ++k) {
      const auto& v = row[static_cast<std::size_t>(k)];
      if (!v.is_number()) {
        throw ParseError("field '" + where + "' row " + std::to_string(i) + " column " +
                         std::to_string(k) + " is not a number");
      }
      m(i, k) = v.get<double>();
    }
  }
  return m;
}

ComplexMatrix complex_field(const Json& root, const std::string& key, Eigen::Index n) {
  const Json& obj = field(root, key, "");
  ComplexMatrix m(n, n);
  m.real() = real_array(field(obj, "re", key), n, key + ".re");
  m.imag() = real_array(field(obj, "im", key), n, key + ".im");
  return m;
}

}  // namespace

CartesianPair parse_matrix_text(std::string_view text, double hermit_tol) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed matrix file: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("matrix file must contain a JSON object");
  const Json& nj = field(root, "n", "");
  if (!nj.is_number_integer() || nj.get<long long>() < 1) {
    throw ParseError("field 'n' must be a positive integer");
  }
  const auto n = static_cast<Eigen::Index>(nj.get<long long>());
  if (root.contains("comment") && !root.at("comment").is_string()) {
    throw ParseError("field 'comment' must be a string");
  }
  const bool has_a = root.contains("A");
  const bool has_pair = root.contains("A1") || root.contains("A2");
  if (has_a == has_pair) {
    throw ParseError("matrix file must contain exactly one of 'A' or 'A1'/'A2'");
  }
  if (has_a) return cartesian_decompose(complex_field(root, "A", n));
  return CartesianPair(complex_field(root, "A1", n), complex_field(root, "A2", n), hermit_tol);
}

CartesianPair parse_matrix_file(const std::filesystem::path& path, double hermit_tol) {
  return parse_matrix_text(read_file(path), hermit_tol);
}

Json matrix_json(const ComplexMatrix& m) {
  Json re = Json::array();
  Json im = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json rr = Json::array();
    Json ri = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      rr.push_back(m(i, k).real());
      ri.push_back(m(i, k).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  return Json{{"re", std::move(re)}, {"im", std::move(im)}};
}

std::string matrix_file_text(const ComplexMatrix& a, const std::optional<std::string>& comment) {
  Json j;
  j["n"] = a.rows();
  if (comment) j["comment"] = *comment;
  j["A"] = matrix_json(a);
  return dump_json(j) + "\n";
}

std::string pair_file_text(const CartesianPair& pair, const std::optional<std::string>& comment) {
  Json j;
  j["n"] = pair.n();
  if (comment) j["comment"] = *comment;
  j["A1"] = matrix_json(pair.a1());
  j["A2"] = matrix_json(pair.a2());
  return dump_json(j) + "\n";
}

std::string mesh_obj_text(const ScaleBody3D& body) {
  if (body.samples.empty()) throw ValidationError("cannot export a body without samples");
  std::string out = "# spectral scale hull\n";
  if (body.affine_dimension <= 2) {
    out += "# degenerate: dim=" + std::to_string(body.affine_dimension) + "\n";
  }
  std::array<char, 128> buf{};
  for (const auto& v : body.hull_vertices) {
    std::snprintf(buf.data(), buf.size(), "v %.17g %.17g %.17g\n", v.x(), v.y(), v.z());
    out += buf.data();
  }
  for (const auto& t : body.hull_triangles) {
    std::snprintf(buf.data(), buf.size(), "f %d %d %d\n", t[0] + 1, t[1] + 1, t[2] + 1);
    out += buf.data();
  }
  return out;
}

void export_mesh(const ScaleBody3D& body, const std::filesystem::path& path) {
  write_file(path, mesh_obj_text(body));
}

std::string dump_json(const Json& j, int indent) {
  std::string out;
  dump_rec(j, indent, 0, out);
  return out;
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  for (unsigned int i = 0; i < len; ++i) {
    hex += kHex[md[i] >> 4];
    hex += kHex[md[i] & 0xf];
  }
  return hex;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace specscale
