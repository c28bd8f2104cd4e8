use super::Lab;
use crate::catalog::{order_of_descriptor, GroupDescriptor};
use crate::error::{Error, Result};
use crate::factored::FactoredInteger;
use crate::provenance::Provenance;

/// Order, largest prime `p` and `|G(p)|` of a simple group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoretoSignature {
    pub group: GroupDescriptor,
    pub order: FactoredInteger,
    pub order_provenance: Provenance,
    pub p: u128,
    /// `None` when no exact source is available.
    pub count_p: Option<FactoredInteger>,
    pub count_provenance: Provenance,
}

impl MoretoSignature {
    pub fn is_exact(&self) -> bool {
        self.count_p.is_some()
    }
}

pub fn moreto_signature(d: &GroupDescriptor, lab: &Lab) -> Result<MoretoSignature> {
    let order = order_of_descriptor(d)?;
    let p = order
        .largest_prime()
        .ok_or_else(|| Error::Inconsistent(format!("|{d}| has no prime divisor")))?;
    let exact = lab.exact_count(d, p as u64)?;
    if let Some(e) = &exact {
        // A Sylow p-subgroup of a simple group with p exactly dividing |G|
        // is cyclic of order p, so its p−1 generators divide |G(p)|.
        if order.exponent(p) == 1 {
            crate::invariants::sylow_normalizer_order(&order, p, &e.count)?;
        }
    }
    Ok(MoretoSignature {
        group: *d,
        order,
        order_provenance: Provenance::Formula,
        p,
        count_provenance: exact.as_ref().map_or(Provenance::Absent, |e| e.provenance),
        count_p: exact.map(|e| e.count),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::DataDir;

    #[test]
    fn signatures() {
        let lab = Lab::new(DataDir::bundled()).with_threads(1);
        let s = moreto_signature(&"A8".parse().unwrap(), &lab).unwrap();
        assert_eq!((s.order.decimal(), s.p), ("20160".to_string(), 7));
        assert_eq!(s.count_p.unwrap().decimal(), "5760");

        let s = moreto_signature(&"M12".parse().unwrap(), &lab).unwrap();
        assert_eq!(s.order.to_string(), "2^6*3^3*5*11");
        assert_eq!(s.count_p.unwrap().to_string(), "2^7*3^3*5");

        let s = moreto_signature(&"A5".parse().unwrap(), &lab).unwrap();
        assert_eq!(s.count_p.unwrap().decimal(), "24");

        let s = moreto_signature(&"U3(3)".parse().unwrap(), &lab).unwrap();
        assert_eq!(s.count_provenance, Provenance::Absent);
        assert!(!s.is_exact());
    }
}
