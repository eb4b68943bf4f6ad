// Solves the grain-heap problem forward and backward, then replays the
// tablet's own procedure and prints the trace.

#include "sexa/bundled_scripts.hpp"
#include "sexa/metrology.hpp"
#include "sexa/solids.hpp"
#include "sexa/tablet_vm.hpp"

#include <iostream>

int main() {
  using namespace sexa;

  const GrainHeap heap{SexRational(4), SexRational(3)};
  const auto dims = grain_heap_dims(heap);
  const Quantity volume{volume_grain_heap(heap), Unit::nindan3()};
  std::cout << "ridge 4, height 3: y = " << format_sex(dims.y) << ", z = " << format_sex(dims.z)
            << ", volume = " << format_quantity(convert(volume, Unit::sar())) << '\n';

  const SexRational top = solve_grain_heap_top(parse_quantity("14,24 sar"), parse_quantity("3 nindan"));
  std::cout << "from 14,24 sar and 3 nindan: ridge = " << format_sex(top) << " nindan\n";

  const Quantity grain = capacity_from_volume(parse_quantity("14,24 sar"));
  std::cout << "capacity " << format_quantity(grain) << " = "
            << format_breakdown(decompose_capacity(grain)) << "\n\n";

  const vm::Trace trace = vm::run(vm::load_bundled("SMT14-P1"));
  std::cout << vm::verify(trace).text;
}
