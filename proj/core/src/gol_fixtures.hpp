// Game of Life gadget data embedded from data/gol at configure time.
#pragma once

namespace annet::fixtures {

const char* wire_json();
const char* clock_json();
const char* nor_gadget_json();
const char* certificate_json();

}  // namespace annet::fixtures
