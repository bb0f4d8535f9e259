#pragma once

// Text formats for rings and the objects built over them. Blank lines and
// '#' comments are ignored everywhere.
//
//   ring       name: R / params: u1,u2 / vars: x1,x2 / order: grevlex|lex|block k
//              (one key per line or separated by ';')
//   module     module L ring R gens g          then one relation column per line
//   ideal      ideal I ring R                  then one generator per line
//   submodule  submodule N of L ring R         then one generator column per line
//   matrix     matrix A ring R rows r cols c   then one row per line
//   complex    complex C ring R ranks r0 r1 .. then "map i" and its rows, i = 1..
//   map        map v ring R                    then "source <L | gens g>" with
//              relation columns, "target <M | gens g>" likewise, and "v0"
//              followed by its rows
//
// Entries on a line are separated by commas.

#include <map>
#include <string>
#include <vector>

#include "smod/resolve.hpp"

namespace smod {

enum class ObjectKind { module, ideal, submodule, matrix, complex, map };

std::string kind_name(ObjectKind k);

// Objects over the parametric ring (always in ratfun mode, so a file with no
// parameters is the special case m = 0).
struct Inputs {
  RingPtr ring;
  std::map<std::string, FPModule<RatFun>> modules;
  std::map<std::string, std::vector<Poly<RatFun>>> ideals;
  std::map<std::string, Submodule<RatFun>> submodules;
  std::map<std::string, Matrix<RatFun>> matrices;
  std::map<std::string, FreeComplex<RatFun>> complexes;
  std::map<std::string, ModuleMap<RatFun>> maps;
  // (kind, name) in load order.
  std::vector<std::pair<ObjectKind, std::string>> loaded;

  const FPModule<RatFun>& module(const std::string& name) const;
  // The i-th loaded object of the given kind.
  const std::string& nth(ObjectKind kind, std::size_t i) const;
  std::size_t count(ObjectKind kind) const;
};

RingPtr parse_ring(const std::string& text, const std::string& file = "<ring>");
RingPtr load_ring(const std::string& path);

// Returns the name of the parsed object. Throws InputError.
std::string parse_object(Inputs& in, const std::string& text, const std::string& file);
std::string load_object(Inputs& in, const std::string& path);

std::string read_file(const std::string& path);

std::string print_ring(const Ring& r);
template <class K>
std::string print_module(const std::string& name, const FPModule<K>& l);
template <class K>
std::string print_ideal(const std::string& name, const RingPtr& ring, const std::vector<Poly<K>>& gens);
template <class K>
std::string print_submodule(const std::string& name, const std::string& of, const Submodule<K>& s);
template <class K>
std::string print_matrix(const std::string& name, const Matrix<K>& a);
template <class K>
std::string print_complex(const std::string& name, const FreeComplex<K>& c);
template <class K>
std::string print_map(const std::string& name, const ModuleMap<K>& v);

}  // namespace smod
