#pragma once

#include "rational.hpp"
#include "field.hpp"
#include "linalg.hpp"
#include "poly.hpp"
#include "sampling.hpp"
#include "tensor.hpp"
#include "lie.hpp"
#include "structure.hpp"
#include "reference_forms.hpp"
#include "as_solver.hpp"
#include "presentation.hpp"
#include "reductive.hpp"
#include "decomposition.hpp"
#include "lemma.hpp"
#include "certificates.hpp"
#include "contact.hpp"
#include "group_model.hpp"
