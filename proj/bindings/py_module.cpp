#include <pybind11/pybind11.h>
PYBIND11_MODULE(sptlab, m) { m.doc() = "stub"; }
