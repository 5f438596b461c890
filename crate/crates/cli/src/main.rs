fn main() {
    println!("sset cli placeholder");
}
