#pragma once

#include "defsem/errors.hpp"
#include "defsem/semantics.hpp"
#include "defsem/af.hpp"
#include "defsem/af_io.hpp"
#include "defsem/defense.hpp"
#include "defsem/contraction.hpp"
#include "defsem/reasons.hpp"
#include "defsem/oracle.hpp"
#include "defsem/generate.hpp"
#include "defsem/campaign.hpp"
#include "defsem/serialize.hpp"
