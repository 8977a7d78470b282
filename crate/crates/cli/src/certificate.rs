use chowtaut_core::correspondence::{ck_projectors, verify_ck, verify_mck, CkCheck};
use chowtaut_core::involution::involution_check;
use chowtaut_core::{RingParams, Sign, ENGINE_VERSION};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignRecord {
    pub eps2: Sign,
    pub eps3: Sign,
    pub sym_form: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub d: u32,
    pub b: u32,
    pub signs: SignRecord,
}

/// Verification certificate. `mck` rows are `[i, j, k, zero]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub engine: &'static str,
    pub params: CertParams,
    pub ck: Vec<CkCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mck: Option<Vec<(usize, usize, usize, bool)>>,
    pub involution: bool,
    pub pass: bool,
}

pub fn certify(params: RingParams, label: Option<&str>, with_mck: bool) -> chowtaut_core::Result<Certificate> {
    let ps = ck_projectors(params)?;
    let ck = verify_ck(&ps)?;
    let mut pass = ck.all_pass();
    let mck = if with_mck {
        let table = verify_mck(&ps)?;
        pass &= table.holds();
        Some(table.entries.iter().map(|e| (e.i, e.j, e.k, e.class.is_zero())).collect())
    } else {
        None
    };
    let involution = involution_check();
    pass &= involution;
    Ok(Certificate {
        engine: ENGINE_VERSION,
        params: CertParams {
            label: label.map(str::to_owned),
            d: params.d,
            b: params.b,
            signs: SignRecord { eps2: params.signs.eps2, eps3: params.signs.eps3, sym_form: "plain-sum" },
        },
        ck: ck.checks,
        mck,
        involution,
        pass,
    })
}
