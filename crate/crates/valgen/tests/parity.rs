mod common;

use common::parity::{cases, run_matrix};

#[tokio::test]
async fn cli_and_api_agree() {
    assert!(cases().len() >= 12);
    let outcome = run_matrix().await.unwrap();
    assert!(
        outcome.successes >= 12 && outcome.errors >= 6,
        "{outcome:?}"
    );
}
