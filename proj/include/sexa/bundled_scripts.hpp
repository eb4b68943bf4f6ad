#pragma once

// Replay scripts for the tablet procedures shipped with the library.

#include "sexa/tablet_vm.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sexa::vm {

struct BundledScript {
  std::string_view name;
  std::string_view tablet;
  std::string_view lines;  // line range replayed
  std::string_view text;
};

inline constexpr std::string_view kSmt14Problem1 = R"(# @name SMT14-P1
# @source SMT No. 14, obverse lines 1-17 (problem 1)
# @outputs x:nindan y z
# Grain heap of volume 14,24 volume-sar and height 3 nindan: find top, width, length.
vol := LIT 14,24 sar                            # Obv. L1-2 volume
h := LIT 3 nindan                               # Obv. L1 height, 3 (nindan, that is, 6) gi
k := RECIP 12 => 0;5                            # Obv. L3-4 reciprocal of the depth constant
vn := MUL k vol => 1,12                         # Obv. L4-5 volume in nindan3
hh := SQUARE h => 9                             # Obv. L5
hhh := MUL hh h => 27                           # Obv. L6
third := THIRD 1                                # Obv. L7-8 0;20 of the regular number 1
wing := SUB 1 third => 0;40                     # Obv. L7-9
wings := DOUBLE wing => 2;20 ! error-for 1;20   # Obv. L9-10 two wings
pyr := MUL wings hhh => 36                      # Obv. L10
mid := SUB vn pyr => 36                         # Obv. L11
hh2 := SQUARE h => 9                            # Obv. L12
inv := RECIP hh2 => 0;6,40                      # Obv. L12-13
x := MUL mid inv => 4                           # Obv. L13-14 top length
y := DOUBLE h => 6                              # Obv. L15-16 width, slope 1 kus per 1 kus
z := ADD y x => 10                              # Obv. L16-17 length
)";

inline constexpr std::string_view kSmt14Problem2 = R"(# @name SMT14-P2
# @source SMT No. 14, reverse lines 2-7 (problem 2, surviving lines)
# @outputs c:sila g7
# Obv. L18 and Rev. L1 are lost; replay starts at the first surviving arithmetic.
# Rev. L5 is damaged; only the multiplication by the storage constant 8,0,0 is replayed.
h := LIT 3 nindan                                  # Rev. L2 height
t := MUL h 12 => 36                                # Rev. L2-3
vol := MUL t 24 => 14,24                           # Rev. L3-4 volume-sar
c := STORAGE vol 8,0,0 => 1,55,12,0,0              # Rev. L4-6 capacity in sila
g7 := DECOMPOSE c gur7 => 20,30 ! error-for 23     # Rev. L6
g := DECOMPOSE c gur => 2,24                       # Rev. L7
)";

inline constexpr std::string_view kBm85194Reverse41 = R"(# @name BM85194-R41
# @source BM 85194, reverse II lines 41-49
# @outputs b:nindan vol:sar
# Square frustum dug into the ground: top side 10 nindan, depth 18 kus, slope 1 per 1.
a := LIT 10 nindan                                 # Rev. II L41 upper side
depth := LIT 18 kus                                # Rev. II L41 depth
run := ADD 0;5 0;5 => 0;10                         # Rev. II L42
d := MUL run depth => 3                            # Rev. II L43 a - b
b := SUB a d => 7                                  # Rev. II L43-44 side of the base
s := ADD b a => 17                                 # Rev. II L44
m := HALVE s => 8;30                               # Rev. II L45
mm := SQUARE m => 1,12;15                          # Rev. II L45-46
hd := HALVE d                                      # Rev. II L46
hd2 := SQUARE hd                                   # Rev. II L47
corr := THIRD hd2 => 0;45                          # Rev. II L47
area := ADD mm corr => 1,13                        # Rev. II L47-48
vol := MUL depth area => 22,30 ! error-for 21,54   # Rev. II L48-49
)";

inline const std::vector<BundledScript>& list_bundled() {
  static const std::vector<BundledScript> scripts{
      {"SMT14-P1", "SMT No. 14", "Obv. L1-L17", kSmt14Problem1},
      {"SMT14-P2", "SMT No. 14", "Rev. L2-L7", kSmt14Problem2},
      {"BM85194-R41", "BM 85194", "Rev. II L41-L49", kBm85194Reverse41},
  };
  return scripts;
}

inline const BundledScript* find_bundled(std::string_view name) {
  for (const auto& s : list_bundled()) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

inline Script load_bundled(std::string_view name) {
  const BundledScript* s = find_bundled(name);
  if (!s) throw std::invalid_argument("no bundled script '" + std::string(name) + "'");
  return parse_script(s->text);
}

}  // namespace sexa::vm
