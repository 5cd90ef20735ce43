//! Emit a certificate for a descent result, verify it from text, then show
//! that an edited multiplier is caught.

use cwbounds::certificate::{verify_text, CertificateBundle};
use cwbounds::constraints::Family;
use cwbounds::engine::{Engine, EngineConfig};
use cwbounds::tbound::TBoundTable;

fn main() -> cwbounds::Result<()> {
    let mut config = EngineConfig::with_families([Family::Delsarte, Family::TCap, Family::Columns]);
    config.column_ks = Some(vec![1, 2, 3]);
    config.known_bound = Some(140);
    let result = Engine::new(TBoundTable::seed(), config).bound(27, 12, 12)?;
    let bundle = CertificateBundle::from_result(&result)?;
    let text = bundle.to_json()?;
    println!("certificate: {} bytes, {} LPs, digest {}", text.len(), bundle.lps.len(), &bundle.digest[..16]);
    let verified = verify_text(&text)?;
    println!("verified {} <= {} ({} LPs checked)", verified.query, verified.bound, verified.lps_checked);

    let mut edited = bundle.clone();
    let slot = edited.lps[0].dual.iter_mut().find(|y| *y != "0").expect("nonzero multiplier");
    *slot = format!("{slot}1");
    edited.digest = edited.compute_digest()?;
    match edited.verify() {
        Ok(_) => println!("edited certificate accepted"),
        Err(e) => println!("edited certificate rejected: {e}"),
    }
    Ok(())
}
