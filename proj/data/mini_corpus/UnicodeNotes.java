public class UnicodeNotes {
    // initialise the café data et prépare
    public void prepareCafeData() {
        cafeReady = true;
    }

    // marks the cafe data ready flag
    public void markCafeDataReady() {
        cafeReady = true;
    }
}
