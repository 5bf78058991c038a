#include "galchar/galchar.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <mutex>
#include <new>
#include <string>

#include "galchar/arith.hpp"
#include "galchar/error.hpp"
#include "galchar/galois.hpp"
#include "galchar/group_spec.hpp"
#include "galchar/report.hpp"

using namespace galchar;

struct gc_group {
  std::string label;
  GroupPtr group;
  mutable std::once_flag table_once;
  mutable std::shared_ptr<const CharacterTable> table;
};

struct gc_table {
  std::shared_ptr<const CharacterTable> table;
};

namespace {

thread_local std::string last_error;

gc_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return GC_ERR_PARSE;
    case ErrorKind::domain: return GC_ERR_DOMAIN;
    case ErrorKind::size: return GC_ERR_SIZE;
    case ErrorKind::invariant: return GC_ERR_INVARIANT;
    case ErrorKind::scope: return GC_ERR_SCOPE;
  }
  return GC_ERR_INTERNAL;
}

template <class F>
gc_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return GC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return GC_ERR_INTERNAL;
  }
}

gc_status argument_error(const char* what) {
  last_error = what;
  return GC_ERR_ARGUMENT;
}

gc_status emit(const std::string& s, char** out) {
  char* buf = static_cast<char*>(std::malloc(s.size() + 1));
  if (buf == nullptr) {
    last_error = "out of memory";
    return GC_ERR_INTERNAL;
  }
  std::memcpy(buf, s.c_str(), s.size() + 1);
  *out = buf;
  return GC_OK;
}

OutputFormat format_of(gc_format f) { return f == GC_FORMAT_STRUCTURED ? OutputFormat::structured : OutputFormat::text; }

bool valid_format(gc_format f) { return f == GC_FORMAT_TEXT || f == GC_FORMAT_STRUCTURED; }

const CharacterTable& table_of(const gc_group* g) {
  std::call_once(g->table_once, [g] { g->table = std::make_shared<const CharacterTable>(compute_character_table(g->group)); });
  return *g->table;
}

}  // namespace

extern "C" {

const char* gc_version(void) { return "1.0.0"; }

const char* gc_last_error(void) { return last_error.c_str(); }

const char* gc_status_name(gc_status status) {
  switch (status) {
    case GC_OK: return "ok";
    case GC_ERR_PARSE: return "parse error";
    case GC_ERR_DOMAIN: return "domain error";
    case GC_ERR_SIZE: return "size error";
    case GC_ERR_INVARIANT: return "invariant violation";
    case GC_ERR_SCOPE: return "out of scope";
    case GC_ERR_ARGUMENT: return "invalid argument";
    case GC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void gc_string_free(char* s) { std::free(s); }

gc_status gc_group_parse(const char* spec, size_t element_cap, gc_group** out) {
  if (spec == nullptr || out == nullptr) return argument_error("null argument");
  return guarded([&] {
    const GroupSpec parsed = parse_group_spec(spec);
    auto g = std::make_unique<gc_group>();
    g->label = to_string(parsed);
    g->group = std::make_shared<const FiniteGroup>(
        instantiate(parsed, element_cap == 0 ? kDefaultElementCap : element_cap));
    *out = g.release();
    return GC_OK;
  });
}

void gc_group_free(gc_group* group) { delete group; }

size_t gc_group_order(const gc_group* group) { return group ? group->group->order() : 0; }

unsigned gc_group_exponent(const gc_group* group) { return group ? group->group->exponent() : 0; }

gc_status gc_group_spec(const gc_group* group, char** out) {
  if (group == nullptr || out == nullptr) return argument_error("null argument");
  return guarded([&] { return emit(group->label, out); });
}

gc_status gc_table_compute(const gc_group* group, gc_table** out) {
  if (group == nullptr || out == nullptr) return argument_error("null argument");
  return guarded([&] {
    table_of(group);
    *out = new gc_table{group->table};
    return GC_OK;
  });
}

void gc_table_free(gc_table* table) { delete table; }

size_t gc_table_size(const gc_table* table) { return table ? table->table->size() : 0; }

gc_status gc_table_entry(const gc_table* table, size_t row, size_t cls, char** out) {
  if (table == nullptr || out == nullptr) return argument_error("null argument");
  return guarded([&] {
    const auto& t = *table->table;
    if (row >= t.size() || cls >= t.classes().size()) throw DomainError("table index out of range");
    return emit(to_display_string(t.entry(row, cls)), out);
  });
}

gc_status gc_table_with_entry(const gc_table* table, size_t row, size_t cls, const char* value, gc_table** out) {
  if (table == nullptr || value == nullptr || out == nullptr) return argument_error("null argument");
  return guarded([&] {
    const auto& t = *table->table;
    if (row >= t.size() || cls >= t.classes().size()) throw DomainError("table index out of range");
    CycNumber v = parse_cyc(value);
    const unsigned n = t.field_order();
    if (n % v.order() != 0) throw DomainError("value does not lie in the field of the table");
    *out = new gc_table{std::make_shared<const CharacterTable>(t.with_entry(row, cls, embed(v, n)))};
    return GC_OK;
  });
}

gc_status gc_table_verify(const gc_table* table, int* passed) {
  if (table == nullptr || passed == nullptr) return argument_error("null argument");
  return guarded([&] {
    *passed = verify_table(*table->table).all_passed() ? 1 : 0;
    return GC_OK;
  });
}

gc_status gc_table_galois_compatible(const gc_table* table, long long ell, int* compatible) {
  if (table == nullptr || compatible == nullptr) return argument_error("null argument");
  return guarded([&] {
    *compatible = verify_compatibility(*table->table, ell).compatible ? 1 : 0;
    return GC_OK;
  });
}

gc_status gc_pair_class_count(const gc_group* group, size_t* out) {
  if (group == nullptr || out == nullptr) return argument_error("null argument");
  return guarded([&] {
    *out = pair_classes(group->group).size();
    return GC_OK;
  });
}

gc_status gc_tuple_class_count(const gc_group* group, unsigned n, size_t* out) {
  if (group == nullptr || out == nullptr) return argument_error("null argument");
  return guarded([&] {
    *out = tuple_classes(*group->group, n);
    return GC_OK;
  });
}

gc_status gc_report_table(const gc_group* group, gc_format format, char** out) {
  if (group == nullptr || out == nullptr || !valid_format(format)) return argument_error("invalid argument");
  return guarded([&] { return emit(table_report(group->label, table_of(group)).render(format_of(format)), out); });
}

gc_status gc_report_galois(const gc_group* group, long long ell, int all, gc_format format, char** out) {
  if (group == nullptr || out == nullptr || !valid_format(format)) return argument_error("invalid argument");
  return guarded([&] {
    const auto& table = table_of(group);
    std::vector<long long> ells;
    if (all != 0) {
      for (unsigned l : units_mod(table.field_order())) ells.push_back(l);
    } else {
      GaloisAut(table.field_order(), ell);  // rejects ell not coprime to the exponent
      ells.push_back(ell);
    }
    return emit(galois_report(group->label, table, ells).render(format_of(format)), out);
  });
}

gc_status gc_report_pairs(const gc_group* group, gc_format format, char** out) {
  if (group == nullptr || out == nullptr || !valid_format(format)) return argument_error("invalid argument");
  return guarded(
      [&] { return emit(pairs_report(group->label, pair_classes(group->group)).render(format_of(format)), out); });
}

gc_status gc_report_braid(const gc_group* group, const char* word, const char* pair, const char* triple,
                          gc_format format, char** out) {
  if (group == nullptr || word == nullptr || out == nullptr || !valid_format(format))
    return argument_error("invalid argument");
  return guarded([&] {
    const auto& g = *group->group;
    const BraidWord w = BraidWord::parse(word);
    std::optional<ElementPair> p;
    std::optional<ElementTriple> t;
    if (pair != nullptr) {
      auto e = parse_element_tuple(g, pair);
      if (e.size() != 2) throw DomainError("expected two elements for --pair, got " + std::to_string(e.size()));
      p = ElementPair{e[0], e[1]};
    }
    if (triple != nullptr) {
      auto e = parse_element_tuple(g, triple);
      if (e.size() != 3) throw DomainError("expected three elements for --triple, got " + std::to_string(e.size()));
      t = ElementTriple{e[0], e[1], e[2]};
    }
    return emit(braid_report(group->label, g, w, p, t).render(format_of(format)), out);
  });
}

gc_status gc_report_cover(const char* kind, unsigned n, long long ell, int has_ell, gc_format format, char** out) {
  if (kind == nullptr || out == nullptr || !valid_format(format)) return argument_error("invalid argument");
  return guarded([&] {
    if (n == 0 || n > 1000) throw DomainError("cover degree must be between 1 and 1000");
    std::optional<long long> l;
    if (has_ell != 0) l = ell;
    const std::string k = kind;
    if (k == "cyclic") return emit(cyclic_cover_report(n, l).render(format_of(format)), out);
    if (k == "dihedral") return emit(dihedral_cover_report(n, l).render(format_of(format)), out);
    throw DomainError("unknown cover kind '" + k + "', expected cyclic or dihedral");
  });
}

gc_status gc_report_tuples(const gc_group* group, unsigned n, gc_format format, char** out) {
  if (group == nullptr || out == nullptr || !valid_format(format)) return argument_error("invalid argument");
  return guarded([&] {
    if (n == 0) throw DomainError("tuple length must be positive");
    return emit(tuples_report(group->label, *group->group, n).render(format_of(format)), out);
  });
}

}  // extern "C"
