#pragma once

// Umbrella header for the linear-optics invariant toolkit.

#include <loinv/scalar.hpp>
#include <loinv/combinat.hpp>
#include <loinv/fock.hpp>
#include <loinv/lo_action.hpp>
#include <loinv/weingarten.hpp>
#include <loinv/poly.hpp>
#include <loinv/averaging.hpp>
#include <loinv/molien.hpp>
#include <loinv/phase_basis.hpp>
#include <loinv/tensor_inv.hpp>
#include <loinv/two_photon.hpp>
#include <loinv/reach.hpp>
#include <loinv/io.hpp>
