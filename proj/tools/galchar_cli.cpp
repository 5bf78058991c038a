// galchar command-line front end; talks to the library only through galchar.h.

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "galchar/galchar.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct Usage {
  std::string message;
};

class GroupHandle {
 public:
  GroupHandle(const std::string& spec, size_t cap) {
    status_ = gc_group_parse(spec.c_str(), cap, &group_);
    if (status_ != GC_OK) error_ = gc_last_error();
  }
  ~GroupHandle() { gc_group_free(group_); }
  GroupHandle(const GroupHandle&) = delete;
  GroupHandle& operator=(const GroupHandle&) = delete;

  gc_status status() const { return status_; }
  const std::string& error() const { return error_; }
  const gc_group* get() const { return group_; }

 private:
  gc_group* group_ = nullptr;
  gc_status status_ = GC_OK;
  std::string error_;
};

size_t element_cap_from_env() {
  const char* raw = std::getenv("GALCHAR_ELEMENT_CAP");
  if (raw == nullptr || *raw == '\0') return 0;
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (errno != 0 || *end != '\0' || v == 0 || raw[0] == '-')
    throw Usage{"GALCHAR_ELEMENT_CAP must be a positive integer, got '" + std::string(raw) + "'"};
  return static_cast<size_t>(v);
}

int fail(gc_status status, const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return status == GC_ERR_ARGUMENT ? kExitUsage : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character tables over cyclotomic fields and the Galois, braid and covering actions around them",
               "galchar"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(gc_version()));

  std::string format_name = "text";
  std::string output_path;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  app.add_option("-o,--output", output_path, "Write the report to a file instead of stdout");

  std::string spec;
  auto* table = app.add_subcommand("table", "Character table of a group");
  table->add_option("spec", spec, "Group: S<k>, A<k>, Z<k>, D<k>, Q8 or 'deg=N; (..),(..)'")->required();

  long long ell = 0;
  auto* galois = app.add_subcommand("galois", "Galois action on rows and columns of the table");
  galois->add_option("spec", spec, "Group specification")->required();
  auto* ell_opt = galois->add_option("--ell", ell, "Exponent of the Galois automorphism");
  auto* all_flag = galois->add_flag("--all", "Every ell coprime to the exponent (default)");
  ell_opt->excludes(all_flag);

  auto* pairs = app.add_subcommand("pairs", "Commuting pairs up to conjugation and their SL2(Z) orbits");
  pairs->add_option("spec", spec, "Group specification")->required();

  std::string word, pair_text, triple_text;
  auto* braid = app.add_subcommand("braid", "Apply a braid word to a pair or triple");
  braid->add_option("spec", spec, "Group specification")->required();
  braid->add_option("--word", word, "Letters s1 s2 s1^-1 s2^-1, e.g. 's1 s2^-1'")->required();
  auto* pair_opt = braid->add_option("--pair", pair_text, "Pair '(..),(..)' in cycle notation");
  auto* triple_opt = braid->add_option("--triple", triple_text, "Triple '(..),(..),(..)' in cycle notation");

  std::string cover_kind;
  unsigned cover_n = 0;
  long long cover_ell = 0;
  auto* cover = app.add_subcommand("cover", "Cyclic or dihedral covering and the Galois action on its deck group");
  cover->add_option("kind", cover_kind, "cyclic or dihedral")->required()->check(CLI::IsMember({"cyclic", "dihedral"}));
  cover->add_option("n", cover_n, "Degree parameter")->required()->check(CLI::Range(1U, 1000U));
  auto* cover_ell_opt = cover->add_option("--ell", cover_ell, "Single Galois exponent (default: every unit)");

  unsigned tuple_n = 0;
  auto* tuples = app.add_subcommand("tuples", "Tuples up to conjugation and reordering");
  tuples->add_option("spec", spec, "Group specification")->required();
  tuples->add_option("--n", tuple_n, "Largest tuple length")->required()->check(CLI::Range(1U, 64U));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const gc_format format = format_name == "structured" ? GC_FORMAT_STRUCTURED : GC_FORMAT_TEXT;
    const size_t cap = element_cap_from_env();
    char* out = nullptr;
    gc_status status = GC_OK;

    if (*cover) {
      status = gc_report_cover(cover_kind.c_str(), cover_n, cover_ell, cover_ell_opt->count() > 0 ? 1 : 0, format,
                               &out);
    } else {
      if (*braid && pair_opt->count() == 0 && triple_opt->count() == 0)
        throw Usage{"braid needs --pair and/or --triple"};
      GroupHandle group(spec, cap);
      if (group.status() != GC_OK) return fail(group.status(), group.error());
      if (*table) {
        status = gc_report_table(group.get(), format, &out);
      } else if (*galois) {
        const bool all = ell_opt->count() == 0;
        status = gc_report_galois(group.get(), ell, all ? 1 : 0, format, &out);
      } else if (*pairs) {
        status = gc_report_pairs(group.get(), format, &out);
      } else if (*braid) {
        status = gc_report_braid(group.get(), word.c_str(), pair_opt->count() ? pair_text.c_str() : nullptr,
                                 triple_opt->count() ? triple_text.c_str() : nullptr, format, &out);
      } else if (*tuples) {
        status = gc_report_tuples(group.get(), tuple_n, format, &out);
      }
    }
    if (status != GC_OK) return fail(status, gc_last_error());

    const std::string report = out ? out : "";
    gc_string_free(out);
    if (output_path.empty()) {
      std::cout << report;
      std::cout.flush();
      return std::cout ? kExitOk : kExitDomain;
    }
    std::ofstream file(output_path, std::ios::binary);
    if (!file || !(file << report) || !file.flush()) {
      std::cerr << "error: cannot write " << output_path << "\n";
      return kExitDomain;
    }
    return kExitOk;
  } catch (const Usage& u) {
    std::cerr << "error: " << u.message << "\n";
    return kExitUsage;
  }
}
