public class StreamCopier {
    /** copies the input stream into the output buffer and returns the copied byte count */
    public long copyStreamBytes(InputStream input, OutputStream output) throws IOException {
        byte[] buffer = new byte[4096];
        long copied = 0;
        int read = input.read(buffer);
        while (read > 0) {
            output.write(buffer, 0, read);
            copied = copied + read;
            read = input.read(buffer);
        }
        return copied;
    }
}
