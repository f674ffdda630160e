#pragma once

#include <json.hpp>

#include "hardy/coprime.hpp"
#include "hardy/divisors_zn.hpp"
#include "hardy/gallery.hpp"
#include "hardy/potapov.hpp"

namespace hardy::io {

using Json = nlohmann::ordered_json;

// Parsers throw InputError on schema violations.

Json to_json(cplx z);
cplx complex_from_json(const Json& j);

/// {"rows":r,"cols":c,"data":[[re,im],...]}, row-major.
Json to_json(const CMatrix& m);
CMatrix matrix_from_json(const Json& j);

/// {"coeffs":[CMatrix,...],"den_zeros":[[re,im],...],"grid_log2":g}
Json to_json(const RationalMatFn& f);
RationalMatFn function_from_json(const Json& j);

/// {"unimodular":[re,im],"zeros":[[re,im],...]}; a bare zero list is accepted on input.
Json to_json(const FiniteBlaschkeProduct& theta);
FiniteBlaschkeProduct theta_from_json(const Json& j);

/// {"unitary":CMatrix,"factors":[{"alpha":[re,im],"proj":CMatrix},...]}
Json to_json(const BPFactor& f);
Json to_json(const BPProduct& b);
BPProduct product_from_json(const Json& j);

Json to_json(const PeelTrace& t);
Json to_json(const ZnDivisorCertificate& c);
Json to_json(const CoprimeReport& r);
Json to_json(const CoprimeFactorization& f);

Json to_json(const gallery::Term& t);
Json to_json(const gallery::GaussRational& g);
/// Rule table over the window: [{"index":n,"target":m,"power":p,"weight":"w","escaped":b} | {"index":n,"zero":true}]
Json table_json(const gallery::ShiftSymbol& s);

}  // namespace hardy::io
