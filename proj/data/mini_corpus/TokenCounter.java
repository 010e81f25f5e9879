public class TokenCounter {
    // count the token words separated by spaces
    public int countTokenWords(String line) {
        String[] words = line.trim().split("\\s+");
        return words.length;
    }

    /* kept for compatibility: older builds used a char loop here */
    private int legacyMode;
}
