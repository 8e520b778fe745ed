//! Holds the `acceptance` test target. Run it with
//! `cargo test -p pathrsk-tests --test acceptance`.
