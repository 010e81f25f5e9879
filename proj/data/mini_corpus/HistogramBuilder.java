public class HistogramBuilder {
    /** builds a histogram of byte frequency counts for the buffer */
    public int[] buildByteFrequencyHistogram(byte[] buffer) {
        int[] frequency = new int[256];
        for (int i = 0; i < buffer.length; i++) {
            frequency[buffer[i] & 0xff]++;
        }
        return frequency;
    }
}
