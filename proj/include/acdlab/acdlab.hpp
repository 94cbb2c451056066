#pragma once

#include "acdlab/chartab.hpp"
#include "acdlab/clifford.hpp"
#include "acdlab/conjugacy.hpp"
#include "acdlab/construct.hpp"
#include "acdlab/corpus.hpp"
#include "acdlab/cyclotomic.hpp"
#include "acdlab/errors.hpp"
#include "acdlab/fraction.hpp"
#include "acdlab/group.hpp"
#include "acdlab/invariants.hpp"
#include "acdlab/modp.hpp"
#include "acdlab/perm.hpp"
#include "acdlab/subgroups.hpp"
#include "acdlab/verify.hpp"
