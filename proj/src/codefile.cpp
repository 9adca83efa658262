#include "ooc3d/codefile.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "json.hpp"

namespace ooc3d {

namespace {

using Json = nlohmann::ordered_json;

const Json& require_field(const Json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw std::runtime_error(std::string("missing field \"") + key + "\"");
  }
  return *it;
}

std::uint64_t require_uint(const Json& node, const char* where) {
  if (!node.is_number_unsigned()) {
    throw std::runtime_error(std::string(where) +
                             " must be a nonnegative integer");
  }
  return node.get<std::uint64_t>();
}

unsigned require_small_uint(const Json& node, const char* where) {
  const std::uint64_t v = require_uint(node, where);
  if (v > 0xffffffffu) {
    throw std::runtime_error(std::string(where) + " is out of range");
  }
  return static_cast<unsigned>(v);
}

void write_file(const std::string& text, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  out.close();
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace

std::string to_structured_text(const Code& code) {
  Json doc;
  doc["format"] = kCodeFileFormat;
  doc["version"] = kCodeFileVersion;
  if (code.provenance) {
    Json c;
    c["family"] = family_name(code.provenance->family);
    c["q"] = code.provenance->q;
    c["k"] = code.provenance->k;
    c["d"] = code.provenance->d;
    c["m"] = code.provenance->m;
    doc["construction"] = std::move(c);
  }
  Json dims;
  dims["wavelengths"] = code.dims.wavelengths;
  dims["space"] = code.dims.space;
  dims["time"] = code.dims.time;
  doc["dims"] = std::move(dims);
  doc["weight"] = code.weight;
  doc["lambda_a"] = code.lambda_a;
  doc["lambda_c"] = code.lambda_c;
  doc["size"] = code.size();
  Json words = Json::array();
  for (const Codeword& cw : code.codewords) {
    Json word = Json::array();
    for (const Pulse& p : cw.pulses) {
      word.push_back(Json::array({p.wavelength, p.space, p.time}));
    }
    words.push_back(std::move(word));
  }
  doc["codewords"] = std::move(words);
  return doc.dump(2) + "\n";
}

void save_structured_text(const Code& code, const std::string& path) {
  write_file(to_structured_text(code), path);
}

Code from_structured_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::runtime_error(std::string("not a structured code file: ") +
                             e.what());
  }
  if (!doc.is_object()) {
    throw std::runtime_error("top level must be an object");
  }

  const Json& format = require_field(doc, "format");
  if (!format.is_string() || format.get<std::string>() != kCodeFileFormat) {
    throw std::runtime_error("unrecognized format tag");
  }
  if (require_uint(require_field(doc, "version"), "version") !=
      static_cast<std::uint64_t>(kCodeFileVersion)) {
    throw std::runtime_error("unsupported file version");
  }

  Code code;
  const Json& jd = require_field(doc, "dims");
  if (!jd.is_object()) {
    throw std::runtime_error("dims must be an object");
  }
  code.dims.wavelengths =
      require_uint(require_field(jd, "wavelengths"), "dims.wavelengths");
  code.dims.space = require_uint(require_field(jd, "space"), "dims.space");
  code.dims.time = require_uint(require_field(jd, "time"), "dims.time");
  if (code.dims.wavelengths == 0 || code.dims.space == 0 ||
      code.dims.time == 0) {
    throw std::runtime_error("dimensions must be positive");
  }

  code.weight = require_uint(require_field(doc, "weight"), "weight");
  code.lambda_a = require_uint(require_field(doc, "lambda_a"), "lambda_a");
  code.lambda_c = require_uint(require_field(doc, "lambda_c"), "lambda_c");
  const std::uint64_t size = require_uint(require_field(doc, "size"), "size");

  if (const auto it = doc.find("construction"); it != doc.end()) {
    if (!it->is_object()) {
      throw std::runtime_error("construction must be an object");
    }
    const Json& fam = require_field(*it, "family");
    if (!fam.is_string()) {
      throw std::runtime_error("construction.family must be a string");
    }
    const std::optional<Family> family =
        family_from_name(fam.get<std::string>());
    if (!family) {
      throw std::runtime_error("unknown construction family \"" +
                               fam.get<std::string>() + "\"");
    }
    Provenance prov;
    prov.family = *family;
    prov.q = require_uint(require_field(*it, "q"), "construction.q");
    prov.k = require_small_uint(require_field(*it, "k"), "construction.k");
    prov.d = require_small_uint(require_field(*it, "d"), "construction.d");
    prov.m = require_small_uint(require_field(*it, "m"), "construction.m");
    code.provenance = prov;
  }

  const Json& words = require_field(doc, "codewords");
  if (!words.is_array()) {
    throw std::runtime_error("codewords must be an array");
  }
  if (words.empty()) {
    throw std::runtime_error("empty code");
  }
  for (const Json& word : words) {
    if (!word.is_array()) {
      throw std::runtime_error("each codeword must be an array of pulses");
    }
    Codeword cw;
    cw.dims = code.dims;
    for (const Json& triple : word) {
      if (!triple.is_array() || triple.size() != 3) {
        throw std::runtime_error(
            "each pulse must be a [wavelength, space, time] triple");
      }
      Pulse p;
      p.wavelength = require_uint(triple[0], "pulse wavelength");
      p.space = require_uint(triple[1], "pulse space");
      p.time = require_uint(triple[2], "pulse time");
      if (p.wavelength >= code.dims.wavelengths || p.space >= code.dims.space ||
          p.time >= code.dims.time) {
        throw std::runtime_error("pulse outside the stated dimensions");
      }
      if (!cw.pulses.empty() && !(cw.pulses.back() < p)) {
        throw std::runtime_error("pulses must be sorted and distinct");
      }
      cw.pulses.push_back(p);
    }
    code.codewords.push_back(std::move(cw));
  }
  if (code.codewords.size() != size) {
    throw std::runtime_error(
        "header size " + std::to_string(size) + " does not match the " +
        std::to_string(code.codewords.size()) + " codewords present");
  }
  return code;
}

Code load_structured_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_structured_text(buf.str());
}

std::string to_csv(const Code& code) {
  std::ostringstream os;
  os << "codeword,wavelength,space,time\n";
  for (std::size_t i = 0; i < code.codewords.size(); ++i) {
    for (const Pulse& p : code.codewords[i].pulses) {
      os << i << ',' << p.wavelength << ',' << p.space << ',' << p.time
         << '\n';
    }
  }
  return os.str();
}

void save_csv(const Code& code, const std::string& path) {
  write_file(to_csv(code), path);
}

}  // namespace ooc3d
